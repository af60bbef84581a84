#pragma once

#include <string>

#include "chevkit/chevalley.hpp"

namespace chevkit {

/// Parses a left-to-right product of atoms:
///   x[(coeffs)](t)  x[-(coeffs)](t)   root element
///   h[w_j](t)  h[wj](t)                h_{omega_j}(t)
///   h[(coeffs)](t)                    coroot element
///   s[i]  n[w i j ...]                Weyl representatives
///   1                                 identity
/// Scalars are expressions in G's field. Errors carry the character offset.
GroupElt parse_element(GroupPtr G, const std::string& text);

/// Same text that GroupElt::str emits; parse_element inverts it.
inline std::string print_element(const GroupElt& g) { return g.str(); }

}  // namespace chevkit
