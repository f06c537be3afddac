#pragma once

#include <string_view>

namespace sommerfeld::detail {

// Contents of data/reference_tables.jsonl, embedded at configure time.
std::string_view reference_tables_jsonl();

}  // namespace sommerfeld::detail
