#include "comax/subalgebra.hpp"

#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace comax {

unsigned worker_threads() {
  if (const char* env = std::getenv("COMAX_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Calls visit(pivots) for each strictly increasing d-subset of [0, n).
template <class Visit>
void for_each_pivot_set(int n, int d, Visit&& visit) {
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  if (d > n) return;
  while (true) {
    visit(piv);
    int i = d - 1;
    while (i >= 0 && piv[i] == n - d + i) --i;
    if (i < 0) return;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
}

} // namespace

std::vector<Subspace> enumerate_subspaces(const AlgebraPtr& algebra, int d) {
  const int n = algebra->dim();
  if (d < 0 || d > n) throw Error("subspace dimension " + std::to_string(d) + " out of range 0.." + std::to_string(n));
  const Field& f = algebra->field();
  const int q = f.order();
  std::vector<Subspace> out;
  if (d == 0) {
    out.push_back(Subspace::zero(algebra));
    return out;
  }

  for_each_pivot_set(n, d, [&](const std::vector<int>& piv) {
    std::vector<bool> is_pivot(n, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free; // (row, col)
    for (int r = 0; r < d; ++r) {
      for (int c = piv[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free.emplace_back(r, c);
      }
    }
    std::vector<int> digits(free.size(), 0);
    while (true) {
      std::vector<Elem> m(static_cast<std::size_t>(d) * n, f.zero());
      for (int r = 0; r < d; ++r) m[static_cast<std::size_t>(r) * n + piv[r]] = f.one();
      for (std::size_t i = 0; i < free.size(); ++i) {
        m[static_cast<std::size_t>(free[i].first) * n + free[i].second] = Elem{static_cast<std::uint16_t>(digits[i])};
      }
      out.push_back(Subspace::from_rref(algebra, d, std::move(m)));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> SubalgebraInventory::all() const {
  std::vector<Subspace> out;
  for (const auto& [d, list] : by_dim) out.insert(out.end(), list.begin(), list.end());
  return out;
}

std::size_t SubalgebraInventory::count(int d) const {
  const auto it = by_dim.find(d);
  return it == by_dim.end() ? 0 : it->second.size();
}

std::size_t SubalgebraInventory::total() const {
  std::size_t t = 0;
  for (const auto& [d, list] : by_dim) t += list.size();
  return t;
}

SubalgebraInventory enumerate_subalgebras(const AlgebraPtr& algebra) {
  const int n = algebra->dim();
  const unsigned threads = worker_threads();
  SubalgebraInventory inv{algebra, {}, {}, Subspace::zero(algebra)};

  for (int d = 1; d <= n - 1; ++d) {
    auto candidates = enumerate_subspaces(algebra, d);
    std::vector<char> closed(candidates.size(), 0);
    detail::parallel_for(candidates.size(), threads,
                         [&](std::size_t i) { closed[i] = candidates[i].is_subalgebra() ? 1 : 0; });
    auto& bucket = inv.by_dim[d];
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (closed[i]) bucket.push_back(std::move(candidates[i]));
    }
  }

  // Maximal: not properly contained in another proper subalgebra.
  const auto everything = inv.all();
  for (const auto& s : everything) {
    bool maximal = true;
    for (const auto& t : everything) {
      if (t.dim() > s.dim() && contains(t, s)) {
        maximal = false;
        break;
      }
    }
    if (maximal) inv.maximals.push_back(s);
  }
  if (inv.maximals.empty() && n >= 1) inv.maximals.push_back(Subspace::zero(algebra));

  if (inv.maximals.empty()) {
    inv.frattini = Subspace::whole(algebra);
  } else {
    Subspace meet = inv.maximals.front();
    for (const auto& m : inv.maximals) meet = intersection(meet, m);
    inv.frattini = meet;
  }
  return inv;
}

Subspace frattini(const AlgebraPtr& algebra) { return enumerate_subalgebras(algebra).frattini; }

} // namespace comax
