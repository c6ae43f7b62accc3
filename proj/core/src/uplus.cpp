#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "quiverhall/errors.hpp"
#include "quiverhall/hall.hpp"
#include "quiverhall/matrix.hpp"

namespace qh {

namespace {

void gen_words(const DimVector& content, std::vector<int>& cur,
               DimVector& used, std::vector<std::vector<int>>& out) {
  if (static_cast<std::int64_t>(cur.size()) == content.total()) {
    out.push_back(cur);
    return;
  }
  for (int i = 0; i < content.size(); ++i) {
    if (used[i] >= content[i]) continue;
    ++used[i];
    cur.push_back(i);
    gen_words(content, cur, used, out);
    cur.pop_back();
    --used[i];
  }
}

std::vector<std::vector<int>> words_of_content(const DimVector& content) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  DimVector used = DimVector::zero(content.size());
  gen_words(content, cur, used, out);
  return out;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

}  // namespace

int u_plus_graded_dim(const Quiver& q, const DimVector& nu,
                      std::uint64_t word_budget) {
  if (nu.size() != q.vertex_count())
    throw InputError("grading vector does not match quiver");
  if (nu.is_zero()) return 1;

  // Crude word-count bound before enumerating.
  std::int64_t total = nu.total();
  double log_words = 0;
  for (int i = 0; i < nu.size(); ++i)
    for (std::int64_t k = 1; k <= nu[i]; ++k) log_words -= std::log(double(k));
  for (std::int64_t k = 1; k <= total; ++k) log_words += std::log(double(k));
  if (log_words > std::log(double(word_budget)))
    throw BudgetError("graded word space", word_budget + 1, word_budget);

  std::vector<std::vector<int>> words = words_of_content(nu);
  std::map<std::vector<int>, int> word_index;
  for (std::size_t i = 0; i < words.size(); ++i)
    word_index.emplace(words[i], static_cast<int>(i));

  IntMatrix cartan = cartan_matrix(q);

  // Classical Serre elements, one per ordered pair i != j with contents
  // fitting inside nu.
  struct Relation {
    std::vector<std::pair<std::vector<int>, std::int64_t>> terms;
    DimVector content;
  };
  std::vector<Relation> relations;
  for (int i = 0; i < q.vertex_count(); ++i)
    for (int j = 0; j < q.vertex_count(); ++j) {
      if (i == j) continue;
      int n = static_cast<int>(1 - cartan.at(i, j));
      DimVector content = DimVector::zero(q.vertex_count());
      content[i] = n;
      content[j] += 1;
      if (!content.dominated_by(nu)) continue;
      Relation rel;
      rel.content = content;
      for (int k = 0; k <= n; ++k) {
        std::vector<int> w;
        for (int t = 0; t < k; ++t) w.push_back(i);
        w.push_back(j);
        for (int t = 0; t < n - k; ++t) w.push_back(i);
        std::int64_t c = binomial(n, k);
        if (k % 2 == 1) c = -c;
        rel.terms.emplace_back(std::move(w), c);
      }
      relations.push_back(std::move(rel));
    }

  // Span of all products m1 * r * m2 with the right total content.
  RationalField rf;
  std::vector<std::vector<Rational>> rows;
  for (const Relation& rel : relations) {
    DimVector rest = nu - rel.content;
    // All splits rest = left + right, all word pairs.
    std::vector<DimVector> lefts;
    {
      DimVector cur = DimVector::zero(nu.size());
      std::function<void(int)> rec = [&](int pos) {
        if (pos == nu.size()) {
          lefts.push_back(cur);
          return;
        }
        for (std::int64_t v = 0; v <= rest[pos]; ++v) {
          cur[pos] = v;
          rec(pos + 1);
        }
        cur[pos] = 0;
      };
      rec(0);
    }
    for (const DimVector& left : lefts) {
      DimVector right = rest - left;
      for (const auto& lw : words_of_content(left))
        for (const auto& rw : words_of_content(right)) {
          std::vector<Rational> row(words.size(), Rational(0));
          for (const auto& [mid, coeff] : rel.terms) {
            std::vector<int> w = lw;
            w.insert(w.end(), mid.begin(), mid.end());
            w.insert(w.end(), rw.begin(), rw.end());
            row[word_index.at(w)] += Rational(static_cast<long>(coeff));
          }
          rows.push_back(std::move(row));
        }
    }
  }

  if (rows.empty()) return static_cast<int>(words.size());
  MatQ mat(static_cast<int>(rows.size()), static_cast<int>(words.size()), rf);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < words.size(); ++c)
      mat.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
  return static_cast<int>(words.size()) - mat.rank();
}

DimCheckReport finite_type_dim_check(HallAlgebra& hall, const DimVector& nu) {
  if (classify_type(*hall.quiver()).verdict != ReprType::finite)
    throw InputError(
        "the dimension comparison is a finite-type statement; beyond finite "
        "type the composition algebra is a proper subalgebra");
  DimCheckReport report;
  report.nu = nu;
  report.hall_dim = hall.classes(nu).class_count();
  report.uplus_dim = u_plus_graded_dim(*hall.quiver(), nu);
  report.equal = report.hall_dim == report.uplus_dim;
  return report;
}

}  // namespace qh
