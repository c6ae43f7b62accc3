#pragma once

#include <string>

#include "quiverhall/forms.hpp"
#include "quiverhall/generic.hpp"
#include "quiverhall/hall.hpp"
#include "quiverhall/lusztig.hpp"
#include "quiverhall/path_algebra.hpp"
#include "quiverhall/rep.hpp"
#include "quiverhall/roots.hpp"

namespace qh {

// Quivers: {"vertices": ["1","2"], "arrows": [{"name":"rho","tail":"1","head":"2"}]}
std::string quiver_to_json(const Quiver& q);
QuiverPtr quiver_from_json(const std::string& text);
QuiverPtr quiver_from_file(const std::string& path);

// Laurent polynomials: {"<exponent>": "<rational>"} with no zero entries.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

// Representations:
// {"quiver": ..., "field": "F2"|"Q", "dims": {"1": 1}, "maps": {"rho": [[..]]}}
std::string rep_to_json(const Rep<PrimeField>& r);
std::string rep_to_json(const Rep<RationalField>& r);

struct ParsedRep {
  std::optional<Rep<PrimeField>> fp;
  std::optional<Rep<RationalField>> rat;
};
ParsedRep rep_from_json(const std::string& text);

// Path algebra elements: [{"path": ["sigma","rho"], "coeff": "1"},
//                         {"path": {"e": "3"}, "coeff": "2/3"}]
std::string pa_elem_to_json(const PathAlgebraElement<PrimeField>& e);
std::string pa_elem_to_json(const PathAlgebraElement<RationalField>& e);
PathAlgebraElement<PrimeField> pa_elem_from_json(const QuiverPtr& q,
                                                 const PrimeField& f,
                                                 const std::string& text);
PathAlgebraElement<RationalField> pa_elem_from_json(const QuiverPtr& q,
                                                    const RationalField& f,
                                                    const std::string& text);

// Hall elements:
// [{"class": {"dim": [1,1], "rep": {...}},
//   "coeff": {"v_parity": 0, "q_poly": "q + 1", "q_denom_pow": 0}}]
std::string hall_element_to_json(HallAlgebra& hall, const HallElement& e);
HallElement hall_element_from_json(HallAlgebra& hall, const std::string& text);

// Polynomial-in-q strings like "q^2 - 1", "2*q + 3", "1".
std::string q_poly_str(const LaurentPoly& p);
LaurentPoly q_poly_parse(const std::string& text);

std::string generic_element_to_json(const GenericElement& e);

std::string classification_to_json(const Classification& c);
std::string roots_to_json(const std::vector<Root>& roots);
std::string roots_to_tsv(const std::vector<Root>& roots);
std::string root_check_to_json(const RootCheckReport& r);
std::string root_check_to_tsv(const RootCheckReport& r);
std::string dim_check_to_json(const DimCheckReport& r);

// Framed points: a representation block for the doubled quiver plus a
// "framing" block with its own dims and per-vertex maps.
std::string framed_point_to_json(const FramedPoint<PrimeField>& fp);
FramedPoint<PrimeField> framed_point_from_json(const std::string& text);

std::string read_text_file(const std::string& path);

}  // namespace qh
