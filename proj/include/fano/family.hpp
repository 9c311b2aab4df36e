#pragma once

#include <string>

namespace fano {

enum class Family { Det, Perm };

std::string to_string(Family f);

/// Accepts "det" or "perm".
Family parse_family(const std::string& text);

}  // namespace fano
