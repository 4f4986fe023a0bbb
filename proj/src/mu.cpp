#include "randcx/mu.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace randcx {

namespace {

struct LocalFaces {
  std::size_t n_vertices = 0;
  std::vector<std::array<std::size_t, 3>> faces;
  std::vector<std::vector<std::size_t>> faces_at;

  explicit LocalFaces(const Complex2& c) {
    auto inc = c.incident_vertices();
    std::vector<std::size_t> local(c.n_vertices(), 0);
    for (std::size_t i = 0; i < inc.size(); ++i) local[inc[i]] = i;
    n_vertices = inc.size();
    faces_at.resize(n_vertices);
    for (const auto& t : c.triangles()) {
      faces.push_back({local[t.a], local[t.b], local[t.c]});
      for (auto v : faces.back()) faces_at[v].push_back(faces.size() - 1);
    }
  }
};

void require_faces(const Complex2& c) {
  if (c.face_count() == 0) throw std::domain_error("density of a complex without triangles");
}

// Lexicographic order of the sorted index lists encoded by two distinct masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  const int d = std::countr_zero(diff);
  const std::uint64_t above = d >= 63 ? 0 : ~((std::uint64_t{2} << d) - 1);
  if ((a >> d) & 1U) return (b & above) != 0;
  return (a & above) == 0;
}

}  // namespace

Rational mu(const Complex2& c) {
  require_faces(c);
  return Rational(BigInt(c.n_vertices()), BigInt(c.face_count()));
}

Rational subset_density(std::span<const Triangle> faces) {
  if (faces.empty()) throw std::domain_error("density of an empty face set");
  std::vector<Vertex> vs;
  for (const auto& t : faces) {
    for (auto v : t.vertices()) vs.push_back(v);
  }
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return Rational(BigInt(vs.size()), BigInt(faces.size()));
}

MuResult mu_tilde(const Complex2& c) {
  require_faces(c);
  return c.face_count() <= kExhaustiveFaceLimit ? mu_tilde_exhaustive(c) : mu_tilde_branch_and_bound(c);
}

MuResult mu_tilde_exhaustive(const Complex2& c) {
  require_faces(c);
  const std::size_t f = c.face_count();
  if (f > kExhaustiveHardLimit) throw std::domain_error("exhaustive density search limited to 30 faces");
  LocalFaces lf(c);
  std::vector<std::uint32_t> hits(lf.n_vertices, 0);
  std::uint64_t mask = 0;
  std::int64_t verts = 0;
  std::int64_t count = 0;
  std::int64_t best_v = 0;
  std::int64_t best_f = 0;
  std::uint64_t best_mask = 0;

  const std::uint64_t total = std::uint64_t{1} << f;
  for (std::uint64_t g = 1; g < total; ++g) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(g));
    mask ^= std::uint64_t{1} << bit;
    if ((mask >> bit) & 1U) {
      ++count;
      for (auto v : lf.faces[bit]) verts += (hits[v]++ == 0);
    } else {
      --count;
      for (auto v : lf.faces[bit]) verts -= (--hits[v] == 0);
    }
    if (best_f == 0) {
      best_v = verts, best_f = count, best_mask = mask;
      continue;
    }
    const std::int64_t lhs = verts * best_f;
    const std::int64_t rhs = best_v * count;
    if (lhs < rhs || (lhs == rhs && lex_less(mask, best_mask))) {
      best_v = verts, best_f = count, best_mask = mask;
    }
  }

  MuResult out;
  out.value = Rational(BigInt(best_v), BigInt(best_f));
  for (std::size_t i = 0; i < f; ++i) {
    if ((best_mask >> i) & 1U) out.witness.push_back(c.triangles()[i]);
  }
  out.method = MuMethod::Exhaustive;
  out.nodes = static_cast<std::size_t>(total - 1);
  return out;
}

namespace {

// Depth-first search for face sets F with v(F)/|F| strictly below the best
// ratio found so far. The bound charges each uncovered vertex fractionally to
// the undecided faces that could still use it.
//
// Only "closed" sets are searched. Adding a face with no vertex outside F
// always lowers the ratio. While the incumbent ratio exceeds 1, so does adding
// a face with one vertex outside F: the result has ratio below max(ratio(F),
// 1). Some improving set is therefore closed under the rule, which lets the
// search force such faces in and prune nodes where an excluded face would be
// forced. If the incumbent drops to 1 or below, the search restarts with the
// weaker rule.
class DensitySearch {
 public:
  explicit DensitySearch(const LocalFaces& lf)
      : lf_(lf), status_(lf.faces.size(), kUndecided), covered_(lf.n_vertices, 0), avail_(lf.n_vertices, 0) {
    for (std::size_t v = 0; v < lf.n_vertices; ++v) avail_[v] = lf.faces_at[v].size();
    best_v_ = static_cast<std::int64_t>(lf.n_vertices);
    best_f_ = static_cast<std::int64_t>(lf.faces.size());
    best_set_.resize(lf.faces.size());
    for (std::size_t i = 0; i < best_set_.size(); ++i) best_set_[i] = i;
  }

  void run() {
    do {
      restart_ = false;
      slack_ = best_v_ > best_f_ ? 1 : 0;
      search();
    } while (restart_);
  }

  std::int64_t best_v() const { return best_v_; }
  std::int64_t best_f() const { return best_f_; }
  const std::vector<std::size_t>& best_set() const { return best_set_; }
  std::size_t nodes() const { return nodes_; }

 private:
  static constexpr char kUndecided = 0;
  static constexpr char kIn = 1;
  static constexpr char kOut = 2;

  void include(std::size_t face) {
    status_[face] = kIn;
    ++f_in_;
    for (auto v : lf_.faces[face]) {
      --avail_[v];
      if (covered_[v]++ == 0) ++v_in_;
    }
  }
  void uninclude(std::size_t face) {
    status_[face] = kUndecided;
    --f_in_;
    for (auto v : lf_.faces[face]) {
      ++avail_[v];
      if (--covered_[v] == 0) --v_in_;
    }
  }
  void exclude(std::size_t face) {
    status_[face] = kOut;
    for (auto v : lf_.faces[face]) --avail_[v];
  }
  void unexclude(std::size_t face) {
    status_[face] = kUndecided;
    for (auto v : lf_.faces[face]) ++avail_[v];
  }

  std::size_t uncovered_in(std::size_t face) const {
    std::size_t k = 0;
    for (auto v : lf_.faces[face]) k += covered_[v] == 0;
    return k;
  }

  bool can_prune() const {
    const long double base = static_cast<long double>(best_f_) * v_in_ - static_cast<long double>(best_v_) * f_in_;
    long double total = base;
    for (std::size_t u = 0; u < status_.size(); ++u) {
      if (status_[u] != kUndecided) continue;
      long double share = 0;
      for (auto w : lf_.faces[u]) {
        if (covered_[w] == 0) share += 1.0L / static_cast<long double>(avail_[w]);
      }
      total += std::min<long double>(0, -static_cast<long double>(best_v_) + best_f_ * share);
    }
    const long double scale = static_cast<long double>(best_f_) * static_cast<long double>(lf_.faces.size() + 1);
    if (total >= 1e-9L * scale) return true;
    if (total <= -1e-9L * scale) return false;
    return exact_bound_nonnegative();
  }

  bool exact_bound_nonnegative() const {
    using boost::multiprecision::cpp_rational;
    cpp_rational total = cpp_rational(best_f_ * v_in_ - best_v_ * f_in_);
    for (std::size_t u = 0; u < status_.size(); ++u) {
      if (status_[u] != kUndecided) continue;
      cpp_rational share = 0;
      for (auto w : lf_.faces[u]) {
        if (covered_[w] == 0) share += cpp_rational(1, static_cast<long long>(avail_[w]));
      }
      cpp_rational term = cpp_rational(-best_v_) + best_f_ * share;
      if (term < 0) total += term;
    }
    return total >= 0;
  }

  void search() {
    ++nodes_;
    std::vector<std::size_t> forced;
    for (bool again = true; again;) {
      again = false;
      for (std::size_t u = 0; u < status_.size(); ++u) {
        if (status_[u] == kUndecided && f_in_ > 0 && uncovered_in(u) <= slack_) {
          include(u);
          forced.push_back(u);
          again = true;
        }
      }
    }
    auto undo = [&] {
      for (auto it = forced.rbegin(); it != forced.rend(); ++it) uninclude(*it);
    };

    // An excluded face the rule would force means no closed set lies here.
    if (f_in_ > 0) {
      for (std::size_t u = 0; u < status_.size(); ++u) {
        if (status_[u] == kOut && uncovered_in(u) <= slack_) {
          undo();
          return;
        }
      }
    }

    if (f_in_ > 0 && v_in_ * best_f_ < best_v_ * f_in_) {
      best_v_ = v_in_;
      best_f_ = f_in_;
      best_set_.clear();
      for (std::size_t u = 0; u < status_.size(); ++u) {
        if (status_[u] == kIn) best_set_.push_back(u);
      }
      if (slack_ == 1 && best_v_ <= best_f_) {
        restart_ = true;
        undo();
        return;
      }
    }

    if (!can_prune()) {
      std::size_t pick = status_.size();
      std::size_t pick_covered = 0;
      for (std::size_t u = 0; u < status_.size(); ++u) {
        if (status_[u] != kUndecided) continue;
        const std::size_t cov = 3 - uncovered_in(u);
        if (pick == status_.size() || cov > pick_covered) {
          pick = u;
          pick_covered = cov;
        }
      }
      if (pick != status_.size()) {
        include(pick);
        search();
        uninclude(pick);
        if (!restart_) {
          exclude(pick);
          search();
          unexclude(pick);
        }
      }
    }
    undo();
  }

  const LocalFaces& lf_;
  std::vector<char> status_;
  std::vector<std::size_t> covered_;
  std::vector<std::size_t> avail_;
  std::int64_t v_in_ = 0;
  std::int64_t f_in_ = 0;
  std::int64_t best_v_ = 0;
  std::int64_t best_f_ = 0;
  std::vector<std::size_t> best_set_;
  std::size_t nodes_ = 0;
  std::size_t slack_ = 0;  // uncovered vertices a forced face may have
  bool restart_ = false;
};

}  // namespace

MuResult mu_tilde_branch_and_bound(const Complex2& c) {
  require_faces(c);
  LocalFaces lf(c);
  DensitySearch search(lf);
  search.run();
  MuResult out;
  out.value = Rational(BigInt(search.best_v()), BigInt(search.best_f()));
  for (auto i : search.best_set()) out.witness.push_back(c.triangles()[i]);
  out.method = MuMethod::BranchAndBound;
  out.nodes = search.nodes();
  return out;
}

bool is_balanced(const Complex2& c) { return mu_tilde(c).value == mu(c); }

Rational mu_tilde_max(std::span<const Complex2> catalog) {
  if (catalog.empty()) throw std::invalid_argument("mu_tilde_max of an empty catalog");
  Rational best = mu_tilde(catalog.front()).value;
  for (const auto& s : catalog.subspan(1)) best = std::max(best, mu_tilde(s).value);
  return best;
}

}  // namespace randcx
