#include "rootreg/tracking.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace rootreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// O(n^3) Hungarian algorithm (potentials form).  Returns the row->col
// assignment minimizing total cost.
std::vector<int> hungarian(const Eigen::MatrixXd& cost) {
  const int n = static_cast<int>(cost.rows());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, false);
    do {
      used[j0] = true;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = -1;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) { minv[j] = cur; way[j] = j0; }
        if (minv[j] < delta) { delta = minv[j]; j1 = j; }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) { u[p[j]] += delta; v[j] -= delta; }
        else minv[j] -= delta;
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> assign(n);
  for (int j = 1; j <= n; ++j) assign[p[j] - 1] = j - 1;
  return assign;
}

double assignment_cost(const Eigen::MatrixXd& cost, const std::vector<int>& assign) {
  double c = 0.0;
  for (int i = 0; i < static_cast<int>(assign.size()); ++i) c += cost(i, assign[i]);
  return c;
}

Eigen::MatrixXd cost_matrix(const CVec& prev, const CVec& next) {
  const int n = static_cast<int>(prev.size());
  Eigen::MatrixXd cost(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) cost(j, i) = std::abs(next(i) - prev(j));
  return cost;
}

// Optimal assignment cost of rows [row..n) onto the columns not yet used.
double completion_cost(const Eigen::MatrixXd& cost, int row,
                       const std::vector<char>& col_used) {
  const int n = static_cast<int>(cost.rows());
  const int m = n - row;
  if (m == 0) return 0.0;
  std::vector<int> cols;
  for (int c = 0; c < n; ++c)
    if (!col_used[c]) cols.push_back(c);
  Eigen::MatrixXd sub(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sub(i, j) = cost(row + i, cols[j]);
  return assignment_cost(sub, hungarian(sub));
}

}  // namespace

double match_cost(const CVec& prev, const CVec& next) {
  const Eigen::MatrixXd cost = cost_matrix(prev, next);
  return assignment_cost(cost, hungarian(cost));
}

std::vector<int> match_step(const CVec& prev, const CVec& next) {
  if (prev.size() != next.size())
    throw std::invalid_argument("match_step: length mismatch");
  const int n = static_cast<int>(prev.size());
  const Eigen::MatrixXd cost = cost_matrix(prev, next);
  std::vector<int> assign = hungarian(cost);
  const double best = assignment_cost(cost, assign);
  const double tie_eps = 1e-12 * (1.0 + best);

  // Fast path: if no transposition ties the optimum, the solution is the
  // unique minimizer and no lexicographic pass is needed.
  bool maybe_tied = false;
  for (int a = 0; a < n && !maybe_tied; ++a)
    for (int b = a + 1; b < n; ++b) {
      const double swapped = best - cost(a, assign[a]) - cost(b, assign[b]) +
                             cost(a, assign[b]) + cost(b, assign[a]);
      if (swapped <= best + tie_eps) { maybe_tied = true; break; }
    }
  if (!maybe_tied) return assign;

  // Lexicographically smallest optimal assignment: fix columns greedily,
  // verifying each choice still completes to an optimal matching.
  std::vector<int> lex(n, -1);
  std::vector<char> used(n, false);
  double fixed = 0.0;
  for (int row = 0; row < n; ++row) {
    for (int c = 0; c < n; ++c) {
      if (used[c]) continue;
      used[c] = true;
      const double total = fixed + cost(row, c) + completion_cost(cost, row + 1, used);
      if (total <= best + tie_eps) {
        lex[row] = c;
        fixed += cost(row, c);
        break;
      }
      used[c] = false;
    }
  }
  return lex;
}

double RootTrack::max_step_displacement() const {
  double d = 0.0;
  for (size_t i = 0; i + 1 < values.size(); ++i)
    d = std::max(d, (values[i + 1] - values[i]).cwiseAbs().maxCoeff());
  return d;
}

namespace {

struct Node {
  double t;
  CVec raw;
  double gap;  // min pairwise root gap at this node
};

double min_pairwise_gap(const CVec& row) {
  double g = kInf;
  for (Eigen::Index a = 0; a < row.size(); ++a)
    for (Eigen::Index b = a + 1; b < row.size(); ++b)
      g = std::min(g, std::abs(row(a) - row(b)));
  return g;
}

// Per-cell matched displacement: max per-pair move under the optimal
// assignment between the two raw rows.
double cell_displacement(const CVec& a, const CVec& b) {
  const std::vector<int> sigma = match_step(a, b);
  double d = 0.0;
  for (int j = 0; j < static_cast<int>(sigma.size()); ++j)
    d = std::max(d, std::abs(b(sigma[j]) - a(j)));
  return d;
}

RootTrack track_on(const CoeffCurve& curve, const GridConfig& cfg,
                   std::vector<double> seed_grid) {
  curve.validate();
  cfg.validate();

  std::vector<Node> nodes;
  auto make_node = [&](double t) {
    CVec raw = solve_all(curve.poly_at(t), cfg.solver);
    const double gap = min_pairwise_gap(raw);
    return Node{t, std::move(raw), gap};
  };
  for (double t : seed_grid) nodes.push_back(make_node(t));

  // cell_disp[i] caches the matched displacement across [nodes[i], nodes[i+1]]
  std::vector<double> cell_disp(nodes.size() - 1);
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    cell_disp[i] = cell_displacement(nodes[i].raw, nodes[i + 1].raw);

  int rounds = 0;
  bool exhausted_with_violation = false;
  double bad_lo = 0, bad_hi = 0;
  for (;;) {
    std::vector<size_t> insert_after;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      const double dt = nodes[i + 1].t - nodes[i].t;
      const double disp = cell_disp[i];
      const double gap = std::min(nodes[i].gap, nodes[i + 1].gap);
      const bool wants = disp > cfg.displacement_cap || gap < cfg.collision_factor * disp;
      if (!wants) continue;
      if (dt <= 2.0 * cfg.min_step) continue;  // min_step reached, accept
      if (static_cast<int>(nodes.size() + insert_after.size()) >= cfg.max_points) {
        if (disp > cfg.displacement_cap) {
          exhausted_with_violation = true;
          bad_lo = nodes[i].t;
          bad_hi = nodes[i + 1].t;
        }
        continue;
      }
      insert_after.push_back(i);
    }
    if (insert_after.empty()) break;
    ++rounds;
    std::vector<Node> next;
    std::vector<double> next_disp;
    next.reserve(nodes.size() + insert_after.size());
    next_disp.reserve(cell_disp.size() + insert_after.size());
    size_t k = 0;
    for (size_t i = 0; i < nodes.size(); ++i) {
      next.push_back(std::move(nodes[i]));
      if (k < insert_after.size() && insert_after[k] == i) {
        Node mid = make_node(0.5 * (next.back().t + nodes[i + 1].t));
        next_disp.push_back(cell_displacement(next.back().raw, mid.raw));
        next_disp.push_back(cell_displacement(mid.raw, nodes[i + 1].raw));
        next.push_back(std::move(mid));
        ++k;
      } else if (i + 1 < nodes.size()) {
        next_disp.push_back(cell_disp[i]);
      }
    }
    nodes = std::move(next);
    cell_disp = std::move(next_disp);
  }
  if (exhausted_with_violation)
    throw TrackError("track: max_points exhausted with displacement_cap violated on [" +
                         std::to_string(bad_lo) + ", " + std::to_string(bad_hi) + "]",
                     bad_lo, bad_hi);

  // Final matching pass.  Row 0 in canonical order; each later row matched to
  // its predecessor by optimal assignment.
  RootTrack out;
  out.refinement_rounds = rounds;
  out.grid.reserve(nodes.size());
  out.values.reserve(nodes.size());
  out.saturated.resize(nodes.size() - 1);
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double disp = cell_disp[i];
    const double gap = std::min(nodes[i].gap, nodes[i + 1].gap);
    out.saturated[i] =
        disp > cfg.displacement_cap || gap < cfg.collision_factor * disp;
  }
  const int n = curve.degree();

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  const CVec& first = nodes.front().raw;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (first(a).real() != first(b).real()) return first(a).real() < first(b).real();
    return first(a).imag() < first(b).imag();
  });
  CVec row0(n);
  for (int j = 0; j < n; ++j) row0(j) = first(order[j]);
  out.grid.push_back(nodes.front().t);
  out.values.push_back(row0);

  for (size_t i = 1; i < nodes.size(); ++i) {
    const std::vector<int> sigma = match_step(out.values.back(), nodes[i].raw);
    CVec row(n);
    for (int j = 0; j < n; ++j) row(j) = nodes[i].raw(sigma[j]);
    out.grid.push_back(nodes[i].t);
    out.values.push_back(row);
    out.matchings.push_back(sigma);
  }
  return out;
}

}  // namespace

RootTrack track(const CoeffCurve& curve, const GridConfig& cfg) {
  std::vector<double> grid(cfg.initial_points);
  for (int i = 0; i < cfg.initial_points; ++i)
    grid[i] = curve.t0 + (curve.t1 - curve.t0) * i / (cfg.initial_points - 1);
  return track_on(curve, cfg, std::move(grid));
}

RootTrack complete_selection(const CoeffCurve& curve, const PartialTrack& partial,
                             const GridConfig& cfg) {
  if (partial.grid.size() != partial.values.size() || partial.grid.empty())
    throw std::invalid_argument("complete_selection: malformed partial track");
  const int n = curve.degree();
  for (size_t k = 0; k < partial.grid.size(); ++k) {
    const MonicPoly p = curve.poly_at(partial.grid[k]);
    const double res = std::abs(eval(p, partial.values[k]));
    const double scale = std::pow(1.0 + std::abs(partial.values[k]), n);
    if (res > 1e3 * cfg.solver.tol * scale + 1e-8)
      throw std::invalid_argument("complete_selection: partial fails root residual check");
  }

  std::vector<double> grid(cfg.initial_points);
  for (int i = 0; i < cfg.initial_points; ++i)
    grid[i] = curve.t0 + (curve.t1 - curve.t0) * i / (cfg.initial_points - 1);
  grid.insert(grid.end(), partial.grid.begin(), partial.grid.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  RootTrack tr = track_on(curve, cfg, std::move(grid));

  // Pick the column closest to the partial selection and move it to column 0.
  std::vector<double> score(n, 0.0);
  for (size_t k = 0; k < partial.grid.size(); ++k) {
    const auto it = std::lower_bound(tr.grid.begin(), tr.grid.end(), partial.grid[k] - 1e-15);
    const size_t row = static_cast<size_t>(it - tr.grid.begin());
    for (int j = 0; j < n; ++j) score[j] += std::abs(tr.values[row](j) - partial.values[k]);
  }
  const int best = static_cast<int>(std::min_element(score.begin(), score.end()) - score.begin());
  if (best != 0) {
    for (auto& row : tr.values) std::swap(row(0), row(best));
    for (auto& sigma : tr.matchings) std::swap(sigma[0], sigma[best]);
  }
  return tr;
}

}  // namespace rootreg
