#pragma once

#include <string>
#include <vector>

#include "gbs/tree.hpp"

namespace gbs {

// Advisory warnings for recognized inputs whose derived values are commonly
// miscopied; attached to the output warnings channel by the CLI.
std::vector<std::string> advisory_notes(const LabeledTree &tree);

} // namespace gbs
