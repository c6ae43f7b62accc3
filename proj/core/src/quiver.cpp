#include "quiverhall/quiver.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace qh {

Quiver::Quiver(
    std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string>> arrows)
    : vertices_(std::move(vertices)) {
  for (int i = 0; i < static_cast<int>(vertices_.size()); ++i) {
    if (vertices_[i].empty()) throw InputError("empty vertex name");
    if (!vertex_idx_.emplace(vertices_[i], i).second)
      throw InputError("duplicate vertex '" + vertices_[i] + "'");
  }
  for (const auto& [name, tail, head] : arrows) {
    if (name.empty()) throw InputError("empty arrow name");
    auto t = vertex_idx_.find(tail);
    auto h = vertex_idx_.find(head);
    if (t == vertex_idx_.end())
      throw InputError("arrow '" + name + "' has unknown tail '" + tail + "'");
    if (h == vertex_idx_.end())
      throw InputError("arrow '" + name + "' has unknown head '" + head + "'");
    int idx = static_cast<int>(arrows_.size());
    if (!arrow_idx_.emplace(name, idx).second)
      throw InputError("duplicate arrow '" + name + "'");
    arrows_.push_back(Arrow{name, t->second, h->second});
  }
}

int Quiver::vertex_index(const std::string& name) const {
  auto it = vertex_idx_.find(name);
  if (it == vertex_idx_.end()) throw InputError("unknown vertex '" + name + "'");
  return it->second;
}

int Quiver::arrow_index(const std::string& name) const {
  auto it = arrow_idx_.find(name);
  if (it == arrow_idx_.end()) throw InputError("unknown arrow '" + name + "'");
  return it->second;
}

bool Quiver::has_loops() const {
  for (const Arrow& a : arrows_)
    if (a.tail == a.head) return true;
  return false;
}

bool Quiver::is_acyclic() const {
  // Kahn's algorithm.
  std::vector<int> indegree(vertices_.size(), 0);
  for (const Arrow& a : arrows_) ++indegree[a.head];
  std::queue<int> ready;
  for (int v = 0; v < vertex_count(); ++v)
    if (indegree[v] == 0) ready.push(v);
  int ordered = 0;
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop();
    ++ordered;
    for (const Arrow& a : arrows_)
      if (a.tail == v && --indegree[a.head] == 0) ready.push(a.head);
  }
  return ordered == vertex_count();
}

Quiver Quiver::opposite() const {
  std::vector<std::tuple<std::string, std::string, std::string>> rev;
  rev.reserve(arrows_.size());
  for (const Arrow& a : arrows_)
    rev.emplace_back(a.name, vertices_[a.head], vertices_[a.tail]);
  return Quiver(vertices_, rev);
}

bool path_is_valid(const Quiver& q, const Path& p) {
  if (p.arrows.empty())
    return p.vertex >= 0 && p.vertex < q.vertex_count();
  for (int i = 0; i + 1 < static_cast<int>(p.arrows.size()); ++i)
    if (q.arrow(p.arrows[i + 1]).head != q.arrow(p.arrows[i]).tail)
      return false;
  return true;
}

std::optional<Path> compose_paths(const Quiver& q, const Path& x,
                                  const Path& y) {
  if (y.head(q) != x.tail(q)) return std::nullopt;
  if (x.is_trivial()) return y;
  if (y.is_trivial()) return x;
  Path r;
  r.arrows = x.arrows;
  r.arrows.insert(r.arrows.end(), y.arrows.begin(), y.arrows.end());
  return r;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.is_trivial()) return "e_" + q.vertex_name(p.vertex);
  std::string s;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += " ";
    s += q.arrow(p.arrows[i]).name;
  }
  return s;
}

bool PathLess::operator()(const Path& a, const Path& b) const {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.is_trivial()) return a.vertex < b.vertex;
  for (int i = 0; i < a.length(); ++i) {
    const std::string& na = q->arrow(a.arrows[i]).name;
    const std::string& nb = q->arrow(b.arrows[i]).name;
    if (na != nb) return na < nb;
  }
  return false;
}

std::vector<Path> enumerate_paths(const Quiver& q, int max_len) {
  if (max_len < 0) throw InputError("negative path length bound");
  std::vector<Path> all;
  for (int v = 0; v < q.vertex_count(); ++v) {
    Path e;
    e.vertex = v;
    all.push_back(e);
  }
  std::vector<Path> frontier = all;  // length-0 paths
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : frontier) {
      int t = p.tail(q);
      for (int a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).head != t) continue;
        Path ext;
        ext.arrows = p.arrows;
        ext.arrows.push_back(a);
        next.push_back(ext);
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), PathLess{&q});
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return all;
}

DoubleQuiver double_quiver(const QuiverPtr& q) {
  if (q->has_loops())
    throw InputError("cannot double a quiver with loops");
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const Arrow& a : q->arrows())
    arrows.emplace_back(a.name, q->vertex_name(a.tail), q->vertex_name(a.head));
  for (const Arrow& a : q->arrows()) {
    std::string rev = a.name + "_bar";
    arrows.emplace_back(rev, q->vertex_name(a.head), q->vertex_name(a.tail));
  }
  DoubleQuiver d;
  d.base = q;
  d.doubled = std::make_shared<const Quiver>(q->vertices(), arrows);
  int n = q->arrow_count();
  d.bar.resize(2 * n);
  d.in_omega.assign(2 * n, false);
  for (int i = 0; i < n; ++i) {
    d.bar[i] = n + i;
    d.bar[n + i] = i;
    d.in_omega[i] = true;
  }
  return d;
}

std::int64_t DimVector::total() const {
  std::int64_t s = 0;
  for (std::int64_t x : d) s += x;
  return s;
}

bool DimVector::is_zero() const {
  for (std::int64_t x : d)
    if (x != 0) return false;
  return true;
}

DimVector DimVector::operator+(const DimVector& o) const {
  if (d.size() != o.d.size()) throw InputError("dimension vector size mismatch");
  DimVector r = *this;
  for (std::size_t i = 0; i < d.size(); ++i) r.d[i] += o.d[i];
  return r;
}

DimVector DimVector::operator-(const DimVector& o) const {
  if (d.size() != o.d.size()) throw InputError("dimension vector size mismatch");
  DimVector r = *this;
  for (std::size_t i = 0; i < d.size(); ++i) r.d[i] -= o.d[i];
  return r;
}

bool DimVector::dominated_by(const DimVector& o) const {
  if (d.size() != o.d.size()) throw InputError("dimension vector size mismatch");
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > o.d[i]) return false;
  return true;
}

std::string DimVector::str() const {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s;
}

DimVector DimVector::parse(const std::string& s, int expected_size) {
  DimVector v;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      std::size_t pos = 0;
      std::int64_t x = std::stoll(tok, &pos);
      if (pos != tok.size() || x < 0) throw std::invalid_argument(tok);
      v.d.push_back(x);
    } catch (const std::exception&) {
      throw InputError("bad dimension entry '" + tok + "'");
    }
  }
  if (expected_size >= 0 && v.size() != expected_size)
    throw InputError("dimension vector '" + s + "' has " +
                     std::to_string(v.size()) + " entries, expected " +
                     std::to_string(expected_size));
  return v;
}

std::string quiver_to_dot(const Quiver& q) {
  std::ostringstream out;
  out << "digraph quiver {\n";
  for (const std::string& v : q.vertices()) out << "  \"" << v << "\";\n";
  for (const Arrow& a : q.arrows())
    out << "  \"" << q.vertex_name(a.tail) << "\" -> \""
        << q.vertex_name(a.head) << "\" [label=\"" << a.name << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace qh
