#include "mwgap/normalize.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

namespace mwgap {

UncutComponents uncut_components(const SimplexGrid& grid, std::span<const int> labels) {
  UncutComponents out;
  out.component_of.assign(grid.size(), -1);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < grid.size(); ++start) {
    if (out.component_of[start] >= 0) continue;
    const int id = static_cast<int>(out.members.size());
    out.members.emplace_back();
    out.component_of[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t r = stack.back();
      stack.pop_back();
      out.members.back().push_back(r);
      for (std::size_t e : grid.incident(r)) {
        const auto [a, b] = grid.endpoints(e);
        const std::size_t other = a == r ? b : a;
        if (labels[other] != labels[r] || out.component_of[other] >= 0) continue;
        out.component_of[other] = id;
        stack.push_back(other);
      }
    }
    std::sort(out.members.back().begin(), out.members.back().end());
  }
  return out;
}

namespace {

void require_triangle(const Cut& cut) {
  if (cut.k() != 3) throw std::invalid_argument("normal forms are defined on Δ_3 only");
  if (!is_non_opposite(cut)) throw std::invalid_argument("cut is not non-opposite");
}

std::array<bool, 3> sides_touched(const SimplexGrid& grid, const std::vector<std::size_t>& members) {
  std::array<bool, 3> touched{false, false, false};
  for (std::size_t r : members) {
    for (int c = 0; c < 3; ++c) {
      if (grid.points()[r][c] == 0) touched[c] = true;
    }
  }
  return touched;
}

bool legal_everywhere(const SimplexGrid& grid, const std::vector<std::size_t>& members, int label) {
  if (label == 4) return true;
  return std::all_of(members.begin(), members.end(), [&](std::size_t r) { return grid.points()[r].supports(label); });
}

}  // namespace

CutShape classify_shape(const Cut& cut) {
  require_triangle(cut);
  const SimplexGrid grid(3, cut.n());
  const auto comps = uncut_components(grid, cut.labels());
  std::array<int, 5> count{};
  for (const auto& m : comps.members) ++count[static_cast<std::size_t>(cut.label_at(m.front()))];
  for (int i = 1; i <= 3; ++i) {
    if (count[static_cast<std::size_t>(i)] != 1) return CutShape::other;
  }
  if (count[4] == 0) return CutShape::ball;
  if (count[4] > 1) return CutShape::other;
  for (const auto& m : comps.members) {
    if (cut.label_at(m.front()) != 4) continue;
    const auto touched = sides_touched(grid, m);
    if (touched[0] && touched[1] && touched[2]) return CutShape::three_corner;
  }
  return CutShape::other;
}

Cut normalize_cut(const Cut& cut) {
  require_triangle(cut);
  const SimplexGrid grid(3, cut.n());
  std::vector<int> labels(cut.labels().begin(), cut.labels().end());

  auto relabel = [&](const std::vector<std::size_t>& members, int label) {
    for (std::size_t r : members) labels[r] = label;
  };

  for (;;) {
    const auto comps = uncut_components(grid, labels);
    bool changed = false;

    for (const auto& m : comps.members) {
      if (labels[m.front()] != 4) continue;
      const auto touched = sides_touched(grid, m);
      if (touched[0] && touched[1] && touched[2]) continue;
      for (int l = 1; l <= 3; ++l) {
        if (legal_everywhere(grid, m, l)) {
          relabel(m, l);
          changed = true;
          break;
        }
      }
      if (!changed) throw StructuralError("4-component missing a side admits no label in [3]");
      break;
    }
    if (changed) continue;

    bool stuck = false;
    for (std::size_t id = 0; id < comps.members.size(); ++id) {
      const auto& m = comps.members[id];
      const int own = labels[m.front()];
      if (own == 4) continue;
      const std::size_t home = grid.terminal_rank(own);
      if (comps.component_of[home] == static_cast<int>(id)) continue;

      std::set<int> neighbour_labels;
      for (std::size_t r : m) {
        for (std::size_t e : grid.incident(r)) {
          const auto [a, b] = grid.endpoints(e);
          const std::size_t other = a == r ? b : a;
          if (comps.component_of[other] != static_cast<int>(id)) neighbour_labels.insert(labels[other]);
        }
      }
      const auto pick = std::find_if(neighbour_labels.begin(), neighbour_labels.end(),
                                     [&](int l) { return legal_everywhere(grid, m, l); });
      if (pick == neighbour_labels.end()) {
        stuck = true;
        continue;
      }
      relabel(m, *pick);
      changed = true;
      break;
    }
    if (changed) continue;
    if (stuck) throw StructuralError("no component without its terminal admits a legal neighbouring label");
    break;
  }
  return Cut(3, cut.n(), CutFamily::nonopposite, std::move(labels));
}

}  // namespace mwgap
