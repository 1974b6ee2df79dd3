#pragma once

#include "interlock/core.hpp"

namespace interlock {

/// Journals linked by shared editors. Line value = number of shared board
/// members; pairs with no shared member get no edge.
OneModeNetwork project_events(const TwoModeNetwork& net);

/// Editors linked by shared journals. Line value = number of boards both sit on.
OneModeNetwork project_actors(const TwoModeNetwork& net);

}  // namespace interlock
