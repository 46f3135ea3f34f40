#pragma once

#include "cayley/contact.hpp"
#include "cayley/report.hpp"

namespace cayley {

// Re-derives every reference factorization of an h-coefficient for the given
// mode, computing h over Q[alpha..gamma_bar] from the symbolic (dual) contact
// matrix under the stated substitution.
Report symbolic_verify(Mode mode);

// Closed forms of h_nm for an indeterminate lower-triangular G.
Report verify_h_closed_forms();

// Matrix and parametrization identities of the family: M M^-1, the Phi
// factorization through c(0,2,0), the reference contact matrices, the null
// polarity of c(0,2,0), the homothety, curvature and membership identities.
Report verify_family_identities();

// Everything above plus the Sigma suite.
Report full_symbolic_report();

}  // namespace cayley
