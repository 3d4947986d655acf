#include "chinampa/enumeration.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "chinampa/errors.hpp"
#include "chinampa/pyramid_calculus.hpp"

namespace chinampa {

int StackProfile::max_length() const {
  return counts.empty() ? 0 : counts.rbegin()->first;
}

StackProfile StackProfile::parse(const std::string& text) {
  StackProfile profile;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::parse, "profile entry '" + item + "' is not L:C");
    int length = 0, count = 0;
    try {
      std::size_t used = 0;
      length = std::stoi(item.substr(0, colon), &used);
      if (used != colon) throw std::invalid_argument(item);
      const std::string rest = item.substr(colon + 1);
      count = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse, "profile entry '" + item + "' is not L:C");
    }
    if (length < 2 || count < 1) throw Error(ErrorKind::domain, "profile needs lengths >= 2 and counts >= 1");
    if (profile.counts.contains(length)) throw Error(ErrorKind::parse, "repeated length in profile");
    profile.counts[length] = count;
  }
  if (profile.counts.empty()) throw Error(ErrorKind::parse, "empty profile");
  if (profile.counts.contains(2) && !profile.pure_chain())
    throw Error(ErrorKind::domain, "pyr(2) counts are only meaningful for pure chains");
  return profile;
}

std::string StackProfile::to_string() const {
  std::string out;
  for (auto [length, count] : counts) {
    if (!out.empty()) out += ',';
    out += std::to_string(length) + ':' + std::to_string(count);
  }
  return out;
}

bool StackProfile::accepts(const std::map<int, int>& signature) const {
  if (pure_chain()) return signature == counts;
  std::map<int, int> big;
  for (auto [length, count] : signature) {
    if (length < 2) return false;
    if (length >= 3) big[length] = count;
  }
  return big == counts;
}

namespace {

struct SearchState {
  CanvasRows canvas;
  std::array<std::uint8_t, kMaxCanvas + 1> used{};

  friend bool operator==(const SearchState&, const SearchState&) = default;
};

struct SearchStateHash {
  std::size_t operator()(const SearchState& s) const noexcept {
    std::size_t h = CanvasRowsHash{}(s.canvas);
    for (int l = 2; l <= s.canvas.n; ++l) h = h * 31 + s.used[l];
    return h;
  }
};

// Lengths the search may place, and how many of each (-1 = unlimited).
std::map<int, int> placement_budget(int n, const StackProfile& profile, bool length_prune) {
  std::map<int, int> budget;
  if (!length_prune) {
    for (int l = 2; l <= n; ++l) budget[l] = -1;
    return budget;
  }
  if (profile.pure_chain()) {
    budget[2] = profile.counts.at(2);
    return budget;
  }
  budget[2] = -1;
  for (auto [length, count] : profile.counts)
    if (length <= n) budget[length] = count;
  return budget;
}

bool budget_spent(const SearchState& s, const std::map<int, int>& budget) {
  for (auto [length, cap] : budget)
    if (cap >= 0 && s.used[length] != cap) return false;
  return true;
}

}  // namespace

std::vector<CanvasRows> list_chinampas(int n, const StackProfile& profile, const SearchOptions& options) {
  if (n < 1 || n > kMaxCanvas) throw Error(ErrorKind::domain, "canvas size out of range");
  if (profile.counts.empty()) throw Error(ErrorKind::domain, "empty profile");
  if (profile.max_length() > n) return {};

  const std::map<int, int> budget = placement_budget(n, profile, options.length_prune);
  std::unordered_set<SearchState, SearchStateHash> seen;
  std::vector<SearchState> pending;
  auto offer = [&](const SearchState& s) {
    if (options.closure_prune && !canvas_closed(s.canvas)) return;
    if (seen.insert(s).second) pending.push_back(s);
  };

  const Stv apex{n, n - 1};
  for (auto [length, cap] : budget) {
    if (cap == 0) continue;
    SearchState root;
    root.canvas.n = n;
    if (!canvas_add_pyramid(root.canvas, apex, length)) continue;
    if (cap > 0) ++root.used[length];
    offer(root);
  }

  while (!pending.empty()) {
    const SearchState cur = pending.back();
    pending.pop_back();
    for (int t = 0; t < n; ++t)
      for (int x = t + 1; x <= n; ++x) {
        if (!(cur.canvas.rows[t] >> x & 1u)) continue;
        for (auto [length, cap] : budget) {
          if (length > t + 1) break;
          if (cap >= 0 && cur.used[length] >= cap) continue;
          SearchState next = cur;
          if (!canvas_add_pyramid(next.canvas, {x, t}, length)) continue;
          if (cap >= 0) ++next.used[length];
          else if (next.canvas == cur.canvas) continue;
          offer(next);
        }
      }
  }

  std::unordered_set<CanvasRows, CanvasRowsHash> found;
  for (const SearchState& s : seen) {
    if (!budget_spent(s, budget) || found.contains(s.canvas)) continue;
    const CanvasVerdict verdict = canvas_judge(s.canvas);
    if (!verdict.countable()) continue;
    if (!profile.pure_chain() && verdict.profit() < 0) continue;
    try {
      if (!profile.accepts(stacking_tree(canvas_primaries(s.canvas)).signature())) continue;
    } catch (const Error&) {
      continue;
    }
    found.insert(s.canvas);
  }
  std::vector<CanvasRows> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [](const CanvasRows& a, const CanvasRows& b) { return a.rows < b.rows; });
  return out;
}

BigCount count_chinampas(int n, const StackProfile& profile, const SearchOptions& options) {
  return BigCount(list_chinampas(n, profile, options).size());
}

BigCount count_pyr2_chains(int n) {
  if (n < 2) throw Error(ErrorKind::domain, "chains need a canvas of size >= 2");
  StackProfile chain;
  chain.counts[2] = n - 1;
  return count_chinampas(n, chain);
}

BigCount profit0_closed_form(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "n must be nonnegative");
  return BigCount(2 + 3 * n) * (BigCount(1) << n) / 2;
}

EgfSeries egf_expand(const std::vector<BigCount>& poly, int scale, int divisor, int terms) {
  if (divisor == 0) throw Error(ErrorKind::domain, "divisor must be nonzero");
  if (terms < 0) throw Error(ErrorKind::domain, "term count must be nonnegative");
  EgfSeries out;
  for (int n = 0; n < terms; ++n) {
    BigCount sum = 0;
    for (int k = 0; k < static_cast<int>(poly.size()) && k <= n; ++k) {
      BigCount falling = 1;
      for (int i = 0; i < k; ++i) falling *= n - i;
      sum += poly[k] * falling * boost::multiprecision::pow(BigCount(scale), n - k);
    }
    if (sum % divisor != 0)
      throw Error(ErrorKind::exactness, "coefficient " + std::to_string(n) + " is not divisible");
    out.push_back(sum / divisor);
  }
  return out;
}

EgfSeries profit1_series(int terms) { return egf_expand({4, 18, 9}, 2, 2, terms); }

Family parse_family(const std::string& name) {
  if (name == "profit0") return Family::profit0;
  if (name == "profit1") return Family::profit1;
  if (name == "pyr2" || name == "pyr2-chains") return Family::pyr2_chains;
  if (name == "repeated-pyramid") return Family::repeated_pyramid;
  throw Error(ErrorKind::parse, "unknown family '" + name + "'");
}

std::vector<FamilyRow> verify_family(Family family, int lo, int hi, int pyramid_length) {
  std::vector<FamilyRow> rows;
  for (int n = lo; n <= hi; ++n) {
    FamilyRow row;
    row.n = n;
    StackProfile profile;
    switch (family) {
      case Family::profit0:
        row.canvas = n + 3;
        profile.counts[3] = 1;
        row.closed_form = profit0_closed_form(n);
        break;
      case Family::profit1:
        row.canvas = n + 4;
        profile.counts[3] = 2;
        row.closed_form = profit1_series(n + 1).back();
        break;
      case Family::pyr2_chains:
        row.canvas = n;
        profile.counts[2] = n - 1;
        row.closed_form = BigCount(1) << (n - 2);
        break;
      case Family::repeated_pyramid:
        row.canvas = pyramid_length + n;
        profile.counts[pyramid_length] = n + 1;
        row.closed_form = BigCount(1) << n;
        break;
    }
    row.profile = profile.to_string();
    row.brute_force = count_chinampas(row.canvas, profile);
    row.match = row.brute_force == row.closed_form;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace chinampa
