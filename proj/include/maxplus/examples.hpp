#pragma once

#include "maxplus/wfa.hpp"

namespace maxplus::examples {

/// Three-state automaton over {a, b} used by the demo subcommand and in
/// tests. Its observation table at mask P = {eps, a, ab, b}, S = {eps, a}
/// is row-closed but not column-closed, which makes a rows-only
/// hypothesis disagree with the table (f(ab) = 36 vs the recorded 35) —
/// the situation the column-closed variant exists to rule out.
Wfa closure_demo_target();

/// Three-state automaton over {a, b, c} whose Hankel rows are not
/// spanned by any finite set of rows: a learner that looks for
/// generators among table rows keeps adding a, aa, aaa, ... forever.
/// Used to exercise the row budget.
Wfa divergent_target();

}  // namespace maxplus::examples
