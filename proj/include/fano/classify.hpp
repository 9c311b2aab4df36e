#pragma once

#include "fano/family.hpp"
#include "fano/params.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fano {

enum class TriState { Connected, Disconnected, Unknown };

std::string to_string(TriState t);

/// A connectedness verdict with the criterion that produced it.  The clause
/// strings are stable identifiers naming the decisive condition; `s` is the
/// witnessing compression index for the disconnection criteria.
struct ConnectivityVerdict {
    TriState state = TriState::Unknown;
    std::string clause;
    std::optional<int> s;
};

// All classifiers require a nonempty Fano scheme (k < (r-1)n) and throw
// DomainError otherwise.

bool det_is_smooth(const FanoParams& p);         // iff k > (r-2)n
bool det_is_irreducible(const FanoParams& p);    // iff m != n and k > (r-2)n+m-r+1
ConnectivityVerdict det_connectivity(const FanoParams& p);
TriState det_is_connected(const FanoParams& p);

bool perm_is_smooth(const FanoParams& p);        // iff n = 2 or k > (r-2)n+1
bool perm_is_irreducible(const FanoParams& p);   // always false when nonempty
ConnectivityVerdict perm_connectivity(const FanoParams& p);
TriState perm_is_connected(const FanoParams& p);

/// One row of the square-case (r = m = n) summary table.
struct TableRow {
    int n = 0;
    int nonempty_max_k = 0;
    std::optional<int> singular_max_k;   // absent when every k is smooth
    std::vector<TriState> connected;     // verdicts for k = 1..nonempty_max_k
};

std::vector<TableRow> render_table(Family family, int n_min, int n_max);

}  // namespace fano
