#pragma once

namespace gbslocc::detail {

// Contents of data/table2_d4.txt, compiled in at build time.
extern const char kTable2Fixture[];

}  // namespace gbslocc::detail
