#include "quiverhall/json_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qh {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw InputError("malformed JSON");
  return j;
}

// Translates accessor failures (missing keys, wrong types) on otherwise
// well-formed JSON into InputError.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InputError(std::string("bad input: ") + e.what());
  }
}

json quiver_json(const Quiver& q) {
  json j;
  j["vertices"] = q.vertices();
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back({{"name", a.name},
                      {"tail", q.vertex_name(a.tail)},
                      {"head", q.vertex_name(a.head)}});
  j["arrows"] = arrows;
  return j;
}

QuiverPtr quiver_from(const json& j) {
  if (!j.contains("vertices") || !j.contains("arrows"))
    throw InputError("quiver JSON needs 'vertices' and 'arrows'");
  std::vector<std::string> verts;
  for (const json& v : j.at("vertices")) verts.push_back(v.get<std::string>());
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const json& a : j.at("arrows"))
    arrows.emplace_back(a.at("name").get<std::string>(),
                        a.at("tail").get<std::string>(),
                        a.at("head").get<std::string>());
  return std::make_shared<const Quiver>(std::move(verts), std::move(arrows));
}

json dims_json(const Quiver& q, const DimVector& d) {
  json j = json::object();
  for (int i = 0; i < q.vertex_count(); ++i)
    j[q.vertex_name(i)] = d[i];
  return j;
}

DimVector dims_from(const Quiver& q, const json& j) {
  DimVector d = DimVector::zero(q.vertex_count());
  for (auto it = j.begin(); it != j.end(); ++it) {
    std::int64_t v = it.value().get<std::int64_t>();
    if (v < 0) throw InputError("negative dimension");
    d[q.vertex_index(it.key())] = v;
  }
  return d;
}

template <Field F>
json maps_json(const Rep<F>& r) {
  json j = json::object();
  for (int a = 0; a < r.quiver->arrow_count(); ++a) {
    json rows = json::array();
    for (int i = 0; i < r.maps[a].rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < r.maps[a].cols(); ++c) {
        // Prime-field entries are plain integers; rationals are strings.
        if constexpr (std::is_same_v<F, PrimeField>)
          row.push_back(r.maps[a].at(i, c));
        else
          row.push_back(r.field.str(r.maps[a].at(i, c)));
      }
      rows.push_back(row);
    }
    j[r.quiver->arrow(a).name] = rows;
  }
  return j;
}

template <Field F>
json rep_json(const Rep<F>& r, const std::string& field_tag) {
  json j;
  j["quiver"] = quiver_json(*r.quiver);
  j["field"] = field_tag;
  j["dims"] = dims_json(*r.quiver, r.dims);
  j["maps"] = maps_json(r);
  return j;
}

template <Field F>
void fill_maps(Rep<F>& r, const json& maps) {
  for (auto it = maps.begin(); it != maps.end(); ++it) {
    int a = r.quiver->arrow_index(it.key());
    const json& rows = it.value();
    if (static_cast<int>(rows.size()) != r.maps[a].rows())
      throw InputError("map '" + it.key() + "' has wrong row count");
    for (int i = 0; i < r.maps[a].rows(); ++i) {
      const json& row = rows.at(i);
      if (static_cast<int>(row.size()) != r.maps[a].cols())
        throw InputError("map '" + it.key() + "' has wrong column count");
      for (int c = 0; c < r.maps[a].cols(); ++c) {
        const json& cell = row.at(c);
        Rational value = cell.is_string()
                             ? rational_parse(cell.get<std::string>())
                             : Rational(static_cast<long>(cell.get<std::int64_t>()));
        r.maps[a].at(i, c) = r.field.from_rational(value);
      }
    }
  }
}

}  // namespace

std::string quiver_to_json(const Quiver& q) { return quiver_json(q).dump(2); }

QuiverPtr quiver_from_json(const std::string& text) {
  return guarded([&] { return quiver_from(parse(text)); });
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read file '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

QuiverPtr quiver_from_file(const std::string& path) {
  return quiver_from_json(read_text_file(path));
}

std::string laurent_to_json(const LaurentPoly& p) {
  json j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = rational_str(c);
  return j.dump();
}

LaurentPoly laurent_from_json(const std::string& text) {
  return guarded([&] {
  json j = parse(text);
  LaurentPoly p;
  for (auto it = j.begin(); it != j.end(); ++it) {
    int e = 0;
    try {
      e = std::stoi(it.key());
    } catch (const std::exception&) {
      throw InputError("bad exponent key '" + it.key() + "'");
    }
    p.add_term(e, rational_parse(it.value().get<std::string>()));
  }
  return p;
  });
}

std::string rep_to_json(const Rep<PrimeField>& r) {
  return rep_json(r, "F" + std::to_string(r.field.modulus())).dump(2);
}

std::string rep_to_json(const Rep<RationalField>& r) {
  return rep_json(r, "Q").dump(2);
}

ParsedRep rep_from_json(const std::string& text) {
  return guarded([&]() -> ParsedRep {
  json j = parse(text);
  QuiverPtr q = quiver_from(j.at("quiver"));
  std::string field_tag = j.at("field").get<std::string>();
  DimVector dims = dims_from(*q, j.at("dims"));
  ParsedRep out;
  if (field_tag == "Q") {
    Rep<RationalField> r(q, RationalField{}, dims);
    if (j.contains("maps")) fill_maps(r, j.at("maps"));
    out.rat = std::move(r);
  } else if (field_tag.size() > 1 && field_tag[0] == 'F') {
    std::int64_t p = std::stoll(field_tag.substr(1));
    Rep<PrimeField> r(q, PrimeField(p), dims);
    if (j.contains("maps")) fill_maps(r, j.at("maps"));
    out.fp = std::move(r);
  } else {
    throw InputError("unknown field tag '" + field_tag + "'");
  }
  return out;
  });
}

namespace {

template <Field F>
json pa_elem_json(const PathAlgebraElement<F>& e) {
  json out = json::array();
  const Quiver& q = *e.quiver();
  for (const auto& [p, c] : e.terms()) {
    json term;
    if (p.is_trivial()) {
      term["path"] = json{{"e", q.vertex_name(p.vertex)}};
    } else {
      json names = json::array();
      for (int a : p.arrows) names.push_back(q.arrow(a).name);
      term["path"] = names;
    }
    term["coeff"] = e.field().str(c);
    out.push_back(term);
  }
  return out;
}

template <Field F>
PathAlgebraElement<F> pa_elem_from(const QuiverPtr& q, const F& f,
                                   const std::string& text) {
  json j = parse(text);
  PathAlgebraElement<F> e(q, f);
  for (const json& term : j) {
    Path p;
    const json& pj = term.at("path");
    if (pj.is_object()) {
      p.vertex = q->vertex_index(pj.at("e").get<std::string>());
    } else {
      for (const json& name : pj)
        p.arrows.push_back(q->arrow_index(name.get<std::string>()));
      if (p.arrows.empty()) throw InputError("empty path array");
      if (!path_is_valid(*q, p)) throw InputError("non-composable path");
    }
    Rational c = rational_parse(term.at("coeff").get<std::string>());
    e.add_term(p, f.from_rational(c));
  }
  return e;
}

}  // namespace

std::string pa_elem_to_json(const PathAlgebraElement<PrimeField>& e) {
  return pa_elem_json(e).dump(2);
}
std::string pa_elem_to_json(const PathAlgebraElement<RationalField>& e) {
  return pa_elem_json(e).dump(2);
}
PathAlgebraElement<PrimeField> pa_elem_from_json(const QuiverPtr& q,
                                                 const PrimeField& f,
                                                 const std::string& text) {
  return guarded([&] { return pa_elem_from(q, f, text); });
}
PathAlgebraElement<RationalField> pa_elem_from_json(const QuiverPtr& q,
                                                    const RationalField& f,
                                                    const std::string& text) {
  return guarded([&] { return pa_elem_from(q, f, text); });
}

std::string q_poly_str(const LaurentPoly& p) { return p.str("q"); }

LaurentPoly q_poly_parse(const std::string& text) {
  // Accepts the str("q") output: terms like "2*q^3", "q", "-1", joined by
  // " + " / " - ", plus leading minus.
  LaurentPoly out;
  std::string s = text;
  std::vector<std::pair<int, std::string>> terms;  // sign, body
  int sign = 1;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  skip_ws();
  if (i < s.size() && s[i] == '-') {
    sign = -1;
    ++i;
  }
  while (i < s.size()) {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && s[i] != ' ') ++i;
    std::string body = s.substr(start, i - start);
    if (body.empty()) break;
    terms.emplace_back(sign, body);
    skip_ws();
    if (i >= s.size()) break;
    if (s[i] == '+') sign = 1;
    else if (s[i] == '-') sign = -1;
    else throw InputError("bad polynomial: '" + text + "'");
    ++i;
  }
  for (const auto& [sgn, body] : terms) {
    Rational coeff(1);
    int exponent = 0;
    std::string rest = body;
    std::size_t star = rest.find('*');
    if (star != std::string::npos) {
      coeff = rational_parse(rest.substr(0, star));
      rest = rest.substr(star + 1);
    }
    if (!rest.empty() && rest[0] == 'q') {
      exponent = 1;
      if (rest.size() > 1) {
        if (rest[1] != '^') throw InputError("bad polynomial term '" + body + "'");
        exponent = std::stoi(rest.substr(2));
      }
    } else if (star == std::string::npos) {
      coeff = rational_parse(rest);
    } else {
      throw InputError("bad polynomial term '" + body + "'");
    }
    out.add_term(exponent, sgn < 0 ? -coeff : coeff);
  }
  return out;
}

namespace {

// Canonical {"v_parity", "q_poly", "q_denom_pow"} of a formal v-Laurent
// coefficient; mixed parity is an invariant violation.
json coeff_json(const HallCoeff& c) {
  auto [even, odd] = reduce_parity(c);
  if (!even.is_zero() && !odd.is_zero())
    throw InvariantError("Hall coefficient has mixed v-parity");
  json j;
  if (even.is_zero() && odd.is_zero()) {
    j["v_parity"] = 0;
    j["q_poly"] = "0";
    j["q_denom_pow"] = 0;
    return j;
  }
  const LaurentPoly& part = even.is_zero() ? odd : even;
  int denom = part.min_exponent() < 0 ? -part.min_exponent() : 0;
  j["v_parity"] = even.is_zero() ? 1 : 0;
  j["q_poly"] = q_poly_str(part.shifted(denom));
  j["q_denom_pow"] = denom;
  return j;
}

HallCoeff coeff_from(const json& j) {
  int parity = j.at("v_parity").get<int>();
  int denom = j.at("q_denom_pow").get<int>();
  LaurentPoly in_q = q_poly_parse(j.at("q_poly").get<std::string>());
  HallCoeff out;
  for (const auto& [e, c] : in_q.terms())
    out.add_term(2 * (e - denom) + parity, c);
  return out;
}

}  // namespace

std::string hall_element_to_json(HallAlgebra& hall, const HallElement& e) {
  json out = json::array();
  for (const auto& [cls, coeff] : e.terms) {
    json item;
    json dim = json::array();
    for (std::int64_t x : cls.dim.d) dim.push_back(x);
    item["class"] = {{"dim", dim},
                     {"rep", parse(rep_to_json(hall.representative(cls)))}};
    item["coeff"] = coeff_json(coeff);
    out.push_back(item);
  }
  return out.dump(2);
}

namespace {

bool same_quiver_structure(const Quiver& a, const Quiver& b) {
  if (a.vertices() != b.vertices()) return false;
  if (a.arrow_count() != b.arrow_count()) return false;
  for (int i = 0; i < a.arrow_count(); ++i) {
    const Arrow& x = a.arrow(i);
    const Arrow& y = b.arrow(i);
    if (x.name != y.name || x.tail != y.tail || x.head != y.head) return false;
  }
  return true;
}

}  // namespace

HallElement hall_element_from_json(HallAlgebra& hall, const std::string& text) {
  return guarded([&]() -> HallElement {
  json j = parse(text);
  HallElement e;
  for (const json& item : j) {
    ParsedRep pr = rep_from_json(item.at("class").at("rep").dump());
    if (!pr.fp)
      throw InputError("Hall element class representative must be over F_p");
    if (!same_quiver_structure(*pr.fp->quiver, *hall.quiver()) ||
        pr.fp->field.modulus() != hall.prime())
      throw InputError("Hall element representative does not match algebra");
    // Rebuild over the algebra's own quiver object.
    Rep<PrimeField> rep(hall.quiver(), PrimeField(hall.prime()), pr.fp->dims);
    rep.maps = std::vector<MatF>();
    for (const MatF& m : pr.fp->maps) {
      MatF copy(m.rows(), m.cols(), PrimeField(hall.prime()));
      for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) copy.at(r, c) = m.at(r, c);
      rep.maps.push_back(std::move(copy));
    }
    e.add_term(hall.class_of(rep), coeff_from(item.at("coeff")));
  }
  return e;
  });
}

std::string generic_element_to_json(const GenericElement& e) {
  json out;
  json primes = json::array();
  for (std::int64_t p : e.primes) primes.push_back(p);
  out["primes"] = primes;
  out["zero"] = e.is_zero();
  json terms = json::array();
  for (const auto& [key, term] : e.terms) {
    json item;
    json dim = json::array();
    for (std::int64_t x : key.dim.d) dim.push_back(x);
    item["dim"] = dim;
    json fp = json::array();
    for (std::int64_t x : key.fingerprint) fp.push_back(x);
    item["fingerprint"] = fp;
    item["coeff"] = coeff_json(term.coeff);
    json counts = json::array();
    for (std::uint64_t c : term.member_counts) counts.push_back(c);
    item["member_counts"] = counts;
    terms.push_back(item);
  }
  out["terms"] = terms;
  return out.dump(2);
}

std::string classification_to_json(const Classification& c) {
  json out;
  out["verdict"] = repr_type_str(c.verdict);
  out["graph"] = c.graph;
  json comps = json::array();
  for (const ComponentClass& cc : c.components) {
    json item;
    item["graph"] = cc.graph_label;
    item["type"] = repr_type_str(cc.shape_type);
    json verts = json::array();
    for (int v : cc.vertices) verts.push_back(v);
    item["vertices"] = verts;
    if (cc.has_loop) item["note"] = "loop vertex: outside ADE classification";
    comps.push_back(item);
  }
  out["components"] = comps;
  return out.dump(2);
}

namespace {

json root_json(const Root& r) {
  json item;
  json vec = json::array();
  for (std::int64_t x : r.vector.d) vec.push_back(x);
  item["vector"] = vec;
  item["kind"] = r.kind == RootKind::real ? "real" : "imaginary";
  return item;
}

}  // namespace

std::string roots_to_json(const std::vector<Root>& roots) {
  json out;
  out["count"] = roots.size();
  json list = json::array();
  for (const Root& r : roots) list.push_back(root_json(r));
  out["roots"] = list;
  return out.dump(2);
}

std::string roots_to_tsv(const std::vector<Root>& roots) {
  std::ostringstream out;
  out << "vector\tkind\n";
  for (const Root& r : roots)
    out << r.vector.str() << "\t"
        << (r.kind == RootKind::real ? "real" : "imaginary") << "\n";
  return out.str();
}

std::string root_check_to_json(const RootCheckReport& r) {
  json out;
  out["verdict"] = r.verdict;
  out["ok"] = r.ok;
  json roots = json::array();
  for (const Root& root : r.roots) roots.push_back(root_json(root));
  out["roots"] = roots;
  json counts = json::array();
  for (const DimClassCount& c : r.counts) {
    json item;
    json dim = json::array();
    for (std::int64_t x : c.dim.d) dim.push_back(x);
    item["dim"] = dim;
    item["iso_classes"] = c.iso_classes;
    item["indecomposables"] = c.indecomposables;
    item["is_root"] = c.is_root;
    if (c.is_root)
      item["root_kind"] = c.root_kind == RootKind::real ? "real" : "imaginary";
    counts.push_back(item);
  }
  out["indecomposables"] = counts;
  return out.dump(2);
}

std::string root_check_to_tsv(const RootCheckReport& r) {
  std::ostringstream out;
  out << "dim\tiso_classes\tindecomposables\tis_root\troot_kind\n";
  for (const DimClassCount& c : r.counts)
    out << c.dim.str() << "\t" << c.iso_classes << "\t" << c.indecomposables
        << "\t" << (c.is_root ? "yes" : "no") << "\t"
        << (c.is_root ? (c.root_kind == RootKind::real ? "real" : "imaginary")
                      : "-")
        << "\n";
  return out.str();
}

std::string dim_check_to_json(const DimCheckReport& r) {
  json out;
  json nu = json::array();
  for (std::int64_t x : r.nu.d) nu.push_back(x);
  out["nu"] = nu;
  out["hall_dim"] = r.hall_dim;
  out["uplus_dim"] = r.uplus_dim;
  out["equal"] = r.equal;
  return out.dump(2);
}

std::string framed_point_to_json(const FramedPoint<PrimeField>& fp) {
  const Quiver& dq = *fp.point.dq->doubled;
  json out;
  out["quiver"] = quiver_json(*fp.point.dq->base);
  out["field"] = "F" + std::to_string(fp.point.field.modulus());
  out["dims"] = dims_json(dq, fp.point.dims);
  json maps = json::object();
  for (int a = 0; a < dq.arrow_count(); ++a) {
    json rows = json::array();
    for (int i = 0; i < fp.point.x[a].rows(); ++i) {
      json row = json::array();
      for (int c = 0; c < fp.point.x[a].cols(); ++c)
        row.push_back(fp.point.x[a].at(i, c));
      rows.push_back(row);
    }
    maps[dq.arrow(a).name] = rows;
  }
  out["maps"] = maps;
  json framing;
  framing["dims"] = dims_json(dq, fp.w);
  json fmaps = json::object();
  for (int i = 0; i < dq.vertex_count(); ++i) {
    json rows = json::array();
    for (int r = 0; r < fp.t[i].rows(); ++r) {
      json row = json::array();
      for (int c = 0; c < fp.t[i].cols(); ++c) row.push_back(fp.t[i].at(r, c));
      rows.push_back(row);
    }
    fmaps[dq.vertex_name(i)] = rows;
  }
  framing["maps"] = fmaps;
  out["framing"] = framing;
  return out.dump(2);
}

FramedPoint<PrimeField> framed_point_from_json(const std::string& text) {
  return guarded([&]() -> FramedPoint<PrimeField> {
  json j = parse(text);
  QuiverPtr base = quiver_from(j.at("quiver"));
  auto dq = std::make_shared<const DoubleQuiver>(double_quiver(base));
  std::string field_tag = j.at("field").get<std::string>();
  if (field_tag.empty() || field_tag[0] != 'F')
    throw InputError("framed points are over F_p");
  PrimeField f(std::stoll(field_tag.substr(1)));
  DimVector dims = dims_from(*dq->doubled, j.at("dims"));
  DoubleRepPoint<PrimeField> pt(dq, f, dims);
  if (j.contains("maps")) {
    const json& maps = j.at("maps");
    for (auto it = maps.begin(); it != maps.end(); ++it) {
      int a = dq->doubled->arrow_index(it.key());
      const json& rows = it.value();
      if (static_cast<int>(rows.size()) != pt.x[a].rows())
        throw InputError("map '" + it.key() + "' has wrong row count");
      for (int r = 0; r < pt.x[a].rows(); ++r) {
        const json& row = rows.at(r);
        if (static_cast<int>(row.size()) != pt.x[a].cols())
          throw InputError("map '" + it.key() + "' has wrong column count");
        for (int c = 0; c < pt.x[a].cols(); ++c)
          pt.x[a].at(r, c) = f.from_int(row.at(c).get<std::int64_t>());
      }
    }
  }
  const json& framing = j.at("framing");
  DimVector w = dims_from(*dq->doubled, framing.at("dims"));
  FramedPoint<PrimeField> fp(std::move(pt), w);
  if (framing.contains("maps")) {
    const json& fmaps = framing.at("maps");
    for (auto it = fmaps.begin(); it != fmaps.end(); ++it) {
      int i = dq->doubled->vertex_index(it.key());
      const json& rows = it.value();
      if (static_cast<int>(rows.size()) != fp.t[i].rows())
        throw InputError("framing map at '" + it.key() + "' has wrong row count");
      for (int r = 0; r < fp.t[i].rows(); ++r) {
        const json& row = rows.at(r);
        if (static_cast<int>(row.size()) != fp.t[i].cols())
          throw InputError("framing map at '" + it.key() +
                           "' has wrong column count");
        for (int c = 0; c < fp.t[i].cols(); ++c)
          fp.t[i].at(r, c) = f.from_int(row.at(c).get<std::int64_t>());
      }
    }
  }
  return fp;
  });
}

}  // namespace qh
