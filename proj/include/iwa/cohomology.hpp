#pragma once

#include <optional>
#include <string>
#include <vector>

#include "iwa/structure.hpp"

namespace iwa {

// A computed cohomology group: cycle and boundary bases plus a class solver.
// Vectors are coordinates over `ambient` (monomials of the structure's frame).
struct CohomologySpace {
    ComplexStructure J;
    std::string kind;
    std::vector<Mask> ambient;
    std::vector<Vec> cycles;      // RREF basis of the cycle space
    std::vector<Vec> boundaries;  // RREF basis of the boundary space
    std::vector<Vec> rep_coords;  // completion of boundaries to a basis of cycles

    size_t dimension() const { return rep_coords.size(); }
    std::vector<FormQ> representatives() const;
    FormQ representative(size_t i) const;

    Vec to_ambient(const FormQ& u) const;  // throws DegreeMismatch if outside
    bool contains_cycle(const FormQ& u) const;
    // Coordinates of [u] in the representative basis; nullopt if u is no cycle.
    std::optional<Vec> class_coordinates(const FormQ& u) const;
    bool is_zero_class(const FormQ& u) const;
    bool same_class(const FormQ& u, const FormQ& v) const;
};

CohomologySpace de_rham(int k);
CohomologySpace dolbeault(int p, int q, const ComplexStructure& J);
CohomologySpace bott_chern(int p, int q, const ComplexStructure& J);
CohomologySpace aeppli(int p, int q, const ComplexStructure& J);

// Froelicher page E_r^{p,q} via the filtration description
//   Z_r = {a in F^p A^{p+q} : d a in F^{p+r}},
//   E_r = Z_r / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2}).
// For r = 2 the result is cross-checked against the map induced by del on E_1
// (well-definedness of that map is verified and failures abort).
CohomologySpace frolicher_page(int r, int p, int q, const ComplexStructure& J);

// Matrix of d restricted to frame-coordinate monomial bases.
Mat frame_d_matrix(const ComplexStructure& J, const std::vector<Mask>& sources,
                   const std::vector<Mask>& targets);

struct MasseyResult {
    FormQ representative;
    std::vector<FormQ> indeterminacy_basis;  // DR 2-class representatives
    bool is_nonzero = false;
};

// Triple Massey product of closed 1-forms; NotDefined unless a^b and b^c are exact.
MasseyResult massey_triple(const FormQ& a, const FormQ& b, const FormQ& c);

// Matrix of the Bott-Chern x Aeppli duality pairing over the computed bases.
Mat duality_pairing_matrix(const CohomologySpace& bc, const CohomologySpace& ae);

// H^{2,1}_[gamma](X_t): the span of the [Gamma_j(t)] inside Dolbeault (2,1).
CohomologySpace essential_space(const ComplexStructure& J);
// H^{1,2}_[gamma](X_t): the span of the [star_t conj(Gamma_j(t))].
CohomologySpace essential_space_12(const ComplexStructure& J);

std::vector<int> betti_numbers();  // b_0..b_6 of the invariant complex

}  // namespace iwa
