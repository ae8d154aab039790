#include "jetdisc/koszul.hpp"

#include <algorithm>

#include "jetdisc/errors.hpp"
#include "jetdisc/poly_io.hpp"

namespace jetdisc {

namespace {

// Subsets of {0..f-1} of size k, each sorted, in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t f, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t j = start; j < f; ++j) {
      cur.push_back(j);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

FreeComplex::FreeComplex(VarSet vars, std::vector<std::size_t> ranks, std::vector<PolyMatrix> differentials,
                         std::vector<int> twists)
    : vars_(std::move(vars)), ranks_(std::move(ranks)), differentials_(std::move(differentials)),
      twists_(std::move(twists)) {
  if (ranks_.size() != differentials_.size() + 1) throw DomainError("complex needs one more rank than differentials");
  for (std::size_t k = 1; k <= differentials_.size(); ++k) {
    const PolyMatrix& d = differentials_[k - 1];
    if (!(d.vars() == vars_)) throw VarSetMismatch("differential over a different VarSet");
    if (d.rows() != ranks_[k - 1] || d.cols() != ranks_[k])
      throw DomainError("differential d_" + std::to_string(k) + " has the wrong shape");
  }
  if (twists_.empty())
    for (std::size_t k = 0; k < ranks_.size(); ++k) twists_.push_back(-static_cast<int>(k));
  if (twists_.size() != ranks_.size()) throw DomainError("one twist label per term is required");
}

FreeComplex build_koszul(const SectionData& section) {
  const std::size_t f = section.components.size();
  if (f == 0) throw DomainError("Koszul complex of an empty section");
  for (const auto& b : section.components)
    if (!(b.vars() == section.vars)) throw VarSetMismatch("section components over different VarSets");

  std::vector<std::vector<std::vector<std::size_t>>> bases;
  std::vector<std::size_t> ranks;
  for (std::size_t k = 0; k <= f; ++k) {
    bases.push_back(subsets(f, k));
    ranks.push_back(bases.back().size());
  }
  std::vector<PolyMatrix> diffs;
  for (std::size_t k = 1; k <= f; ++k) {
    const auto& src = bases[k];
    const auto& dst = bases[k - 1];
    PolyMatrix d(section.vars, dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
      const auto& s = src[c];
      for (std::size_t pos = 0; pos < s.size(); ++pos) {
        std::vector<std::size_t> face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(pos));
        std::size_t r = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), face) - dst.begin());
        Polynomial entry = section.components[s[pos]];
        d.set(r, c, pos % 2 == 0 ? entry : -entry);
      }
    }
    diffs.push_back(std::move(d));
  }
  return FreeComplex(section.vars, std::move(ranks), std::move(diffs));
}

bool verify_chain(const FreeComplex& complex) {
  for (std::size_t k = 2; k <= complex.length(); ++k) {
    const PolyMatrix& lower = complex.differential(k - 1);
    const PolyMatrix& upper = complex.differential(k);
    if (lower.cols() != upper.rows()) throw DomainError("consecutive differentials do not compose");
    if (!(lower * upper).is_zero()) return false;
  }
  return true;
}

std::vector<RationalMatrix> evaluate_complex(const FreeComplex& complex, const Point& point) {
  std::vector<RationalMatrix> out;
  for (const auto& d : complex.differentials()) out.push_back(d.evaluate(point));
  return out;
}

bool ExactnessReport::interior_exact() const {
  for (std::size_t k = 1; k + 1 < homology.size(); ++k)
    if (homology[k] != 0) return false;
  return true;
}

bool ExactnessReport::exact() const {
  return std::all_of(homology.begin(), homology.end(), [](std::size_t h) { return h == 0; });
}

ExactnessReport exactness_at_point(const FreeComplex& complex, const Point& point) {
  auto mats = evaluate_complex(complex, point);
  ExactnessReport report;
  for (const auto& m : mats) report.differential_ranks.push_back(matrix_rank(m));
  const std::size_t f = complex.length();
  for (std::size_t k = 0; k <= f; ++k) {
    std::size_t in_rank = k >= 1 ? report.differential_ranks[k - 1] : 0;  // rank d_k
    std::size_t out_rank = k < f ? report.differential_ranks[k] : 0;     // rank d_{k+1}
    report.homology.push_back(complex.ranks()[k] - in_rank - out_rank);
  }
  return report;
}

nlohmann::json to_json(const FreeComplex& complex) {
  nlohmann::json diffs = nlohmann::json::array();
  for (const auto& d : complex.differentials()) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < d.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < d.cols(); ++c) row.push_back(to_json(d(r, c)));
      rows.push_back(std::move(row));
    }
    diffs.push_back(std::move(rows));
  }
  return {{"ranks", complex.ranks()}, {"differentials", std::move(diffs)}, {"twists", complex.twists()}};
}

FreeComplex complex_from_json(const nlohmann::json& j) {
  try {
    auto ranks = j.at("ranks").get<std::vector<std::size_t>>();
    auto twists = j.at("twists").get<std::vector<int>>();
    std::vector<std::vector<std::vector<Polynomial>>> raw;
    std::optional<VarSet> vars;
    for (const auto& d : j.at("differentials")) {
      std::vector<std::vector<Polynomial>> rows;
      for (const auto& row : d) {
        std::vector<Polynomial> entries;
        for (const auto& e : row) {
          entries.push_back(polynomial_from_json(e));
          if (!vars) vars = entries.back().vars();
        }
        rows.push_back(std::move(entries));
      }
      raw.push_back(std::move(rows));
    }
    if (!vars) vars = VarSet();
    std::vector<PolyMatrix> diffs;
    for (std::size_t k = 0; k < raw.size(); ++k) {
      std::size_t rows = k < ranks.size() ? ranks[k] : 0;
      std::size_t cols = k + 1 < ranks.size() ? ranks[k + 1] : 0;
      PolyMatrix m(*vars, rows, cols);
      if (raw[k].size() != rows) throw ParseError("differential row count does not match ranks");
      for (std::size_t r = 0; r < rows; ++r) {
        if (raw[k][r].size() != cols) throw ParseError("differential column count does not match ranks");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, raw[k][r][c]);
      }
      diffs.push_back(std::move(m));
    }
    return FreeComplex(*vars, std::move(ranks), std::move(diffs), std::move(twists));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  }
}

}  // namespace jetdisc
