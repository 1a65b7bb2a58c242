#include "breakgeo/path_assembly.hpp"

#include <algorithm>

namespace breakgeo {

namespace {

class Assembler {
 public:
  explicit Assembler(const AssemblyRequest& req) : req_(req), n_(req.n) {}

  std::optional<Permutation> run() {
    if (!build_pieces()) return std::nullopt;
    const int joins = static_cast<int>(pieces_.size()) - 1;
    if (req_.min_label[0] + req_.min_label[1] > joins) return std::nullopt;
    build_links();
    visited_.assign(pieces_.size(), false);
    for (std::size_t p = 0; p < pieces_.size(); ++p) {
      for (int side = 0; side < 2; ++side) {
        const auto& seq = pieces_[p];
        if (side == 1 && seq.size() == 1) break;
        const int start = side == 0 ? seq.front() : seq.back();
        visited_[p] = true;
        order_.clear();
        order_.push_back(start);
        if (search(1, exit_of(start), {0, 0})) return Permutation(flatten());
        visited_[p] = false;
      }
    }
    return std::nullopt;
  }

 private:
  bool build_pieces() {
    std::vector<std::vector<int>> nbr(n_ + 1);
    for (const auto& a : req_.forced) {
      if (a.lo < 1 || a.hi > n_) return false;
      nbr[a.lo].push_back(a.hi);
      nbr[a.hi].push_back(a.lo);
    }
    piece_of_.assign(n_ + 1, -1);
    for (int v = 1; v <= n_; ++v) {
      if (nbr[v].size() > 2) return false;
    }
    for (int v = 1; v <= n_; ++v) {
      if (piece_of_[v] >= 0 || nbr[v].size() == 2) continue;
      std::vector<int> seq{v};
      piece_of_[v] = static_cast<int>(pieces_.size());
      int prev = 0, cur = v;
      while (true) {
        int next = 0;
        for (int w : nbr[cur]) {
          if (w != prev) next = w;
        }
        if (next == 0) break;
        prev = cur;
        cur = next;
        piece_of_[cur] = static_cast<int>(pieces_.size());
        seq.push_back(cur);
      }
      pieces_.push_back(std::move(seq));
    }
    // Vertices left over sit on cycles.
    return std::all_of(piece_of_.begin() + 1, piece_of_.end(), [](int p) { return p >= 0; });
  }

  void build_links() {
    links_.assign(n_ + 1, {});
    for (const auto& e : req_.optional) {
      const int a = e.edge.lo, b = e.edge.hi;
      if (a < 1 || b > n_ || piece_of_[a] == piece_of_[b]) continue;
      if (!is_end(a) || !is_end(b)) continue;
      links_[a].push_back({b, e.label});
      links_[b].push_back({a, e.label});
    }
  }

  bool is_end(int v) const {
    const auto& seq = pieces_[piece_of_[v]];
    return seq.front() == v || seq.back() == v;
  }

  int exit_of(int entry) const {
    const auto& seq = pieces_[piece_of_[entry]];
    return seq.front() == entry ? seq.back() : seq.front();
  }

  bool search(std::size_t placed, int exit, std::array<int, 2> used) {
    const int remaining = static_cast<int>(pieces_.size() - placed);
    for (int l = 0; l < 2; ++l) {
      if (used[l] + remaining < req_.min_label[l]) return false;
    }
    if (remaining == 0) return true;
    if (remaining < req_.min_label[0] - used[0] + req_.min_label[1] - used[1]) return false;
    for (const auto& [to, label] : links_[exit]) {
      const int p = piece_of_[to];
      if (visited_[p]) continue;
      visited_[p] = true;
      order_.push_back(to);
      auto next_used = used;
      ++next_used[label];
      if (search(placed + 1, exit_of(to), next_used)) return true;
      order_.pop_back();
      visited_[p] = false;
    }
    return false;
  }

  std::vector<int> flatten() const {
    std::vector<int> out;
    for (int entry : order_) {
      const auto& seq = pieces_[piece_of_[entry]];
      if (seq.front() == entry) {
        out.insert(out.end(), seq.begin(), seq.end());
      } else {
        out.insert(out.end(), seq.rbegin(), seq.rend());
      }
    }
    return out;
  }

  struct Link {
    int to;
    int label;
  };

  const AssemblyRequest& req_;
  int n_;
  std::vector<std::vector<int>> pieces_;
  std::vector<int> piece_of_;
  std::vector<std::vector<Link>> links_;
  std::vector<bool> visited_;
  std::vector<int> order_;
};

}  // namespace

std::optional<Permutation> assemble_path(const AssemblyRequest& request) {
  if (request.n < 2) return std::nullopt;
  return Assembler(request).run();
}

}  // namespace breakgeo
