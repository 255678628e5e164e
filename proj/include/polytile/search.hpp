#pragma once

namespace polytile {

/// What a backtracking search reports: the first solution, the number of
/// solutions, or all of them.
enum class SearchMode { First, Count, Enumerate };

} // namespace polytile
