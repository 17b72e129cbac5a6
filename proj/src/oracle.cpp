#include "dpi2/oracle.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace dpi2 {

namespace {

using State = unsigned __int128;

struct StateHash {
  std::size_t operator()(State s) const noexcept {
    std::uint64_t x = std::uint64_t(s) ^ (std::uint64_t(s >> 64) * 0x9E3779B97F4A7C15ull);
    x ^= x >> 31;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 29;
    return std::size_t(x);
  }
};

struct Node {
  State parent;
  std::int32_t depth;
  std::int16_t cell;  // cell changed from parent to this state, -1 at the root
};

using Table = std::unordered_map<State, Node, StateHash>;

class Search {
 public:
  Search(const GridMap& proto, int bits) : w_(proto.m()), h_(proto.n()), bits_(bits), proto_(proto) {
    cells_ = (w_ - 1) * (h_ - 1);
    mask_ = (State(1) << bits_) - 1;
  }

  int cells() const { return cells_; }

  State encode(const GridMap& f) const {
    State s = 0;
    for (int c = 0; c < cells_; ++c) s |= State(std::uint32_t(f.at(c % (w_ - 1) + 1, c / (w_ - 1) + 1))) << (c * bits_);
    return s;
  }

  int value(State s, int c) const { return int(std::uint32_t((s >> (c * bits_)) & mask_)); }

  GridMap decode(State s) const {
    GridMap g = proto_;
    for (int c = 0; c < cells_; ++c) g.set(c % (w_ - 1) + 1, c / (w_ - 1) + 1, value(s, c));
    return g;
  }

  // Neighbours in deterministic order: cell raster order, then value.
  template <class F>
  void expand(State s, F&& visit) const {
    const GridMap g = decode(s);
    const auto& img = g.codomain();
    const std::uint64_t all = img.size() >= 64 ? ~0ull : (1ull << img.size()) - 1;
    for (int c = 0; c < cells_; ++c) {
      const int a = c % (w_ - 1) + 1, b = c / (w_ - 1) + 1;
      std::uint64_t ok = all;
      for (int db = -1; db <= 1; ++db)
        for (int da = -1; da <= 1; ++da) ok &= img.mask(std::size_t(g.at(a + da, b + db)));
      const int cur = g.at(a, b);
      ok &= ~(1ull << cur);
      const State cleared = s & ~(mask_ << (c * bits_));
      while (ok) {
        const int v = std::countr_zero(ok);
        ok &= ok - 1;
        visit(cleared | (State(std::uint32_t(v)) << (c * bits_)), c);
      }
    }
  }

 private:
  int w_, h_, bits_, cells_ = 0;
  State mask_;
  GridMap proto_;
};

struct PadResult {
  bool found = false;
  std::vector<SpiderMove> moves;
};

PadResult search_pad(const Search& S, State from, State to, std::size_t& budget, int w) {
  PadResult out;
  if (from == to) {
    out.found = true;
    return out;
  }
  Table side[2];
  std::vector<State> frontier[2] = {{from}, {to}};
  side[0].emplace(from, Node{from, 0, -1});
  side[1].emplace(to, Node{to, 0, -1});
  if (budget < 2) return out;
  budget -= 2;

  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int k = frontier[1].size() < frontier[0].size() ? 1 : 0;
    Table& mine = side[k];
    const Table& other = side[1 - k];
    std::vector<State> next;
    bool have = false, exhausted = false;
    State meet = 0;
    int best = 0;
    for (State s : frontier[k]) {
      const int d = mine.at(s).depth;
      S.expand(s, [&](State t, int c) {
        if (exhausted || mine.count(t)) return;
        if (budget == 0) {
          exhausted = true;
          return;
        }
        --budget;
        mine.emplace(t, Node{s, d + 1, std::int16_t(c)});
        next.push_back(t);
        if (auto it = other.find(t); it != other.end()) {
          const int total = d + 1 + it->second.depth;
          if (!have || total < best) {
            have = true;
            best = total;
            meet = t;
          }
        }
      });
      if (exhausted) break;
    }
    if (have) {
      // Forward half: root -> meet, recovered backwards.
      std::vector<SpiderMove> fwd;
      for (State s = meet; side[0].at(s).cell >= 0; s = side[0].at(s).parent) {
        const int c = side[0].at(s).cell;
        fwd.push_back({c % (w - 1) + 1, c / (w - 1) + 1, S.value(s, c)});
      }
      std::reverse(fwd.begin(), fwd.end());
      // Backward half: meet -> target, each step restores the parent's value.
      for (State s = meet; side[1].at(s).cell >= 0; s = side[1].at(s).parent) {
        const Node& nd = side[1].at(s);
        fwd.push_back({nd.cell % (w - 1) + 1, nd.cell / (w - 1) + 1, S.value(nd.parent, nd.cell)});
      }
      out.found = true;
      out.moves = std::move(fwd);
      return out;
    }
    if (exhausted) return out;
    frontier[k] = std::move(next);
  }
  return out;
}

}  // namespace

OracleResult homotopy_decide(const GridMap& f, const GridMap& g, const SearchBudget& budget) {
  if (!same_codomain(f.codomain(), g.codomain()) || f.basepoint() != g.basepoint())
    throw std::domain_error("oracle needs a common codomain and basepoint");
  const Rect lim = budget.pad_limit;
  const int w0 = std::max(f.m(), g.m()), h0 = std::max(f.n(), g.n());
  if (lim.m < w0 || lim.n < h0) throw precondition_error("pad limit is smaller than the inputs");
  const std::size_t np = f.codomain().size();
  if (np > 64) throw std::domain_error("oracle supports codomains with at most 64 points");
  const int bits = std::max(1, int(std::bit_width(np - 1)));

  OracleResult res;
  std::size_t left = budget.max_states;
  for (int s = 0;; ++s) {
    const int w = std::min(w0 + s, lim.m), h = std::min(h0 + s, lim.n);
    res.pad = {w, h};
    const GridMap F = trivial_extend(f, w, h), G = trivial_extend(g, w, h);
    const int cells = std::max(0, (w - 1)) * std::max(0, (h - 1));
    if (cells * bits > 128) throw std::domain_error("padded state does not fit in 128 bits");
    if (cells == 0) {
      if (F == G) {
        res.outcome = Outcome::Equivalent;
        res.cert = Certificate{F, {}, G};
        return res;
      }
    } else {
      Search S(constant_map({w, h}, f.codomain_ptr(), f.basepoint()), bits);
      const std::size_t before = left;
      PadResult pr = search_pad(S, S.encode(F), S.encode(G), left, w);
      res.states += before - left;
      if (pr.found) {
        res.outcome = Outcome::Equivalent;
        res.cert = Certificate{F, std::move(pr.moves), G};
        return res;
      }
    }
    if (left == 0 || (w == lim.m && h == lim.n)) return res;
  }
}

}  // namespace dpi2
