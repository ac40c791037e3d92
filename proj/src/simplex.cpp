#include "fleet/solver/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace fleet::solver {

namespace {

constexpr double kPivTol = 1e-9;    // minimum pivot magnitude in the ratio test
constexpr double kLuTol = 1e-11;    // minimum pivot magnitude in the factorization
constexpr double kDegenStep = 1e-12;
constexpr int kBlandTrigger = 600;  // consecutive degenerate pivots before Bland's rule

enum class VarState : unsigned char { Basic, AtLower, AtUpper, FreeZero };

struct Eta {
  int slot = 0;
  double pivot = 1.0;
  std::vector<std::pair<int, double>> rest;  // (slot, w) entries, slot != this->slot
};

}  // namespace

struct SimplexSolver::Impl {
  // --- static problem data ---
  int n = 0;  // structural variables
  int m = 0;  // rows
  int N = 0;  // n + m
  std::vector<int> col_start, col_row;
  std::vector<double> col_val;
  std::vector<double> model_lb, model_ub;  // length N; logical bounds from row senses
  std::vector<double> cost;                // length N, zero on logicals
  double feas_tol, opt_tol;

  // --- basis and factorization state ---
  std::vector<int> basic;        // slot -> var
  std::vector<int> basis_slot;   // var -> slot or -1
  std::vector<VarState> state;   // var states
  std::vector<double> xval;      // var values (basic ones mirrored from xb)
  std::vector<double> lb, ub;    // active bounds for this solve

  // LU factors in pivot order
  std::vector<int> pivot_row, pivot_slot, row_to_pivot, slot_to_pivot;
  std::vector<std::vector<std::pair<int, double>>> lcol;  // L entries, pivot-index space
  std::vector<std::vector<std::pair<int, double>>> ucol;  // U column entries (p < k)
  std::vector<double> udiag;
  long lu_nnz = 0;
  std::vector<Eta> etas;
  long eta_nnz = 0;

  // scratch
  std::vector<double> work_pivot, work_slot, dense_row;
  std::vector<int> pattern;
  std::vector<unsigned char> mark;

  Impl(const milp::MilpModel& model, double ftol, double otol) : feas_tol(ftol), opt_tol(otol) {
    n = model.num_vars();
    m = model.num_rows();
    N = n + m;
    col_start.assign(n + 1, 0);
    // coalesce duplicate terms per (row, var)
    std::vector<std::vector<std::pair<int, double>>> cols(n);
    for (int i = 0; i < m; ++i) {
      for (const auto& t : model.rows[i].terms)
        if (t.coeff != 0.0) cols[t.var].push_back({i, t.coeff});
    }
    for (int j = 0; j < n; ++j) {
      auto& c = cols[j];
      std::sort(c.begin(), c.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<std::pair<int, double>> merged;
      for (const auto& [row, v] : c) {
        if (!merged.empty() && merged.back().first == row)
          merged.back().second += v;
        else
          merged.push_back({row, v});
      }
      c = std::move(merged);
      col_start[j + 1] = col_start[j] + static_cast<int>(c.size());
    }
    col_row.resize(col_start[n]);
    col_val.resize(col_start[n]);
    for (int j = 0; j < n; ++j) {
      int at = col_start[j];
      for (const auto& [row, v] : cols[j]) {
        col_row[at] = row;
        col_val[at] = v;
        ++at;
      }
    }

    model_lb.resize(N);
    model_ub.resize(N);
    cost.assign(N, 0.0);
    for (int j = 0; j < n; ++j) {
      model_lb[j] = model.vars[j].lb;
      model_ub[j] = model.vars[j].ub;
      cost[j] = model.vars[j].obj;
    }
    for (int i = 0; i < m; ++i) {
      const auto& row = model.rows[i];
      switch (row.sense) {
        case milp::Sense::LE:
          model_lb[n + i] = -milp::kInf;
          model_ub[n + i] = row.rhs;
          break;
        case milp::Sense::GE:
          model_lb[n + i] = row.rhs;
          model_ub[n + i] = milp::kInf;
          break;
        case milp::Sense::EQ:
          model_lb[n + i] = row.rhs;
          model_ub[n + i] = row.rhs;
          break;
      }
    }

    basic.resize(m);
    basis_slot.resize(N);
    state.resize(N);
    xval.resize(N);
    work_pivot.assign(m, 0.0);
    work_slot.assign(m, 0.0);
    dense_row.assign(m, 0.0);
    mark.assign(m, 0);
  }

  // column access: structural from CSC, logical is -e_row
  template <typename F>
  void for_col(int var, F&& f) const {
    if (var < n) {
      for (int k = col_start[var]; k < col_start[var + 1]; ++k) f(col_row[k], col_val[k]);
    } else {
      f(var - n, -1.0);
    }
  }

  // ---------- factorization ----------

  // Gilbert-Peierls left-looking LU over the current basis, with a
  // row/column-singleton peel choosing the pivot order. Returns false if the
  // basis is numerically singular.
  bool factorize() {
    etas.clear();
    eta_nnz = 0;
    pivot_row.assign(m, -1);
    pivot_slot.assign(m, -1);
    row_to_pivot.assign(m, -1);
    slot_to_pivot.assign(m, -1);
    lcol.assign(m, {});
    ucol.assign(m, {});
    udiag.assign(m, 0.0);
    lu_nnz = 0;

    // patterns of basis columns and row lists
    std::vector<std::vector<int>> colpat(m), rowslots(m);
    for (int s = 0; s < m; ++s) {
      for_col(basic[s], [&](int row, double) {
        colpat[s].push_back(row);
        rowslots[row].push_back(s);
      });
    }

    // peel: repeatedly pivot singleton columns and rows; order only
    std::vector<int> ccount(m), rcount(m);
    std::vector<unsigned char> arow(m, 1), acol(m, 1);
    std::deque<std::pair<bool, int>> queue;  // (is_col, index)
    for (int s = 0; s < m; ++s) ccount[s] = static_cast<int>(colpat[s].size());
    for (int i = 0; i < m; ++i) rcount[i] = static_cast<int>(rowslots[i].size());
    for (int s = 0; s < m; ++s)
      if (ccount[s] == 1) queue.push_back({true, s});
    for (int i = 0; i < m; ++i)
      if (rcount[i] == 1) queue.push_back({false, i});

    std::vector<std::pair<int, int>> order;  // (slot, prescribed row or -1)
    order.reserve(m);
    auto deactivate = [&](int slot, int row) {
      acol[slot] = 0;
      arow[row] = 0;
      for (int rr : colpat[slot])
        if (arow[rr] && --rcount[rr] == 1) queue.push_back({false, rr});
      for (int ss : rowslots[row])
        if (acol[ss] && --ccount[ss] == 1) queue.push_back({true, ss});
    };
    while (!queue.empty()) {
      auto [is_col, idx] = queue.front();
      queue.pop_front();
      if (is_col) {
        if (!acol[idx] || ccount[idx] != 1) continue;
        int row = -1;
        for (int rr : colpat[idx])
          if (arow[rr]) row = rr;
        if (row < 0) return false;  // empty active column: structurally singular
        order.push_back({idx, row});
        deactivate(idx, row);
      } else {
        if (!arow[idx] || rcount[idx] != 1) continue;
        int slot = -1;
        for (int ss : rowslots[idx])
          if (acol[ss]) slot = ss;
        if (slot < 0) return false;
        order.push_back({slot, idx});
        deactivate(slot, idx);
      }
    }
    {
      std::vector<int> bump;
      for (int s = 0; s < m; ++s)
        if (acol[s]) bump.push_back(s);
      std::sort(bump.begin(), bump.end(), [&](int a, int b) {
        if (ccount[a] != ccount[b]) return ccount[a] < ccount[b];
        return a < b;
      });
      for (int s : bump) order.push_back({s, -1});
    }
    if (static_cast<int>(order.size()) != m) return false;

    // left-looking elimination in that order; work in original row space,
    // L entries temporarily keyed by row
    std::vector<std::vector<std::pair<int, double>>> lrows(m);
    std::vector<double>& x = dense_row;
    std::fill(x.begin(), x.end(), 0.0);
    std::vector<int> pat, topo, dfs_stack, dfs_pos;
    std::vector<unsigned char>& seen = mark;
    std::fill(seen.begin(), seen.end(), 0);

    for (int t = 0; t < m; ++t) {
      const int slot = order[t].first;
      const int want_row = order[t].second;
      pat.clear();
      topo.clear();
      for_col(basic[slot], [&](int row, double v) {
        x[row] = v;
        pat.push_back(row);
      });
      // reach: DFS over already-pivoted rows
      for (int seed : pat) {
        int p0 = row_to_pivot[seed];
        if (p0 < 0 || seen[p0]) continue;
        dfs_stack.clear();
        dfs_pos.clear();
        dfs_stack.push_back(p0);
        dfs_pos.push_back(0);
        seen[p0] = 1;
        while (!dfs_stack.empty()) {
          const int p = dfs_stack.back();
          std::size_t& at = reinterpret_cast<std::size_t&>(dfs_pos.back());
          bool descended = false;
          while (at < lrows[p].size()) {
            const int child_row = lrows[p][at].first;
            ++at;
            const int cp = row_to_pivot[child_row];
            if (cp >= 0 && !seen[cp]) {
              seen[cp] = 1;
              dfs_stack.push_back(cp);
              dfs_pos.push_back(0);
              descended = true;
              break;
            }
          }
          if (!descended && at >= lrows[p].size()) {
            topo.push_back(p);
            dfs_stack.pop_back();
            dfs_pos.pop_back();
          }
        }
      }
      // apply L columns in topological order (reverse postorder)
      for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const int p = *it;
        const double xp = x[pivot_row[p]];
        seen[p] = 0;
        if (xp == 0.0) continue;
        for (const auto& [row, lval] : lrows[p]) {
          if (x[row] == 0.0 && row_to_pivot[row] < 0) pat.push_back(row);
          x[row] -= lval * xp;
        }
      }
      // U column: values at reached pivots
      auto& uc = ucol[t];
      for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        const double v = x[pivot_row[*it]];
        if (v != 0.0) uc.push_back({*it, v});
      }
      // pivot choice among unpivoted pattern rows
      int piv = -1;
      double best = 0.0;
      for (int row : pat) {
        if (row_to_pivot[row] >= 0) continue;
        const double a = std::abs(x[row]);
        if (a > best) {
          best = a;
          piv = row;
        }
      }
      if (want_row >= 0 && std::abs(x[want_row]) > std::max(kLuTol, 0.001 * best))
        piv = want_row;
      if (piv < 0 || std::abs(x[piv]) <= kLuTol) {
        for (int row : pat) x[row] = 0.0;  // cleanup before bailing
        for (auto it = topo.rbegin(); it != topo.rend(); ++it) x[pivot_row[*it]] = 0.0;
        return false;
      }
      const double pv = x[piv];
      udiag[t] = pv;
      pivot_row[t] = piv;
      pivot_slot[t] = slot;
      row_to_pivot[piv] = t;
      slot_to_pivot[slot] = t;
      auto& lr = lrows[t];
      for (int row : pat) {
        if (row == piv || row_to_pivot[row] >= 0) continue;
        const double v = x[row];
        if (v != 0.0) lr.push_back({row, v / pv});
      }
      lu_nnz += static_cast<long>(lr.size() + uc.size() + 1);
      // clear work vector
      for (int row : pat) x[row] = 0.0;
    }

    // translate L rows to pivot indices
    for (int t = 0; t < m; ++t) {
      auto& lc = lcol[t];
      lc.reserve(lrows[t].size());
      for (const auto& [row, v] : lrows[t]) lc.push_back({row_to_pivot[row], v});
    }
    return true;
  }

  // FTRAN: w = B^{-1} a, a given as (row, value) pairs; result dense in slot space.
  void ftran(const std::vector<std::pair<int, double>>& a, std::vector<double>& out) {
    std::vector<double>& w = work_pivot;
    std::fill(w.begin(), w.end(), 0.0);
    for (const auto& [row, v] : a) w[row_to_pivot[row]] += v;
    for (int p = 0; p < m; ++p) {
      const double wp = w[p];
      if (wp == 0.0) continue;
      for (const auto& [i, v] : lcol[p]) w[i] -= v * wp;
    }
    for (int k = m - 1; k >= 0; --k) {
      double wk = w[k];
      if (wk == 0.0) continue;
      wk /= udiag[k];
      w[k] = wk;
      for (const auto& [p, v] : ucol[k]) w[p] -= v * wk;
    }
    for (int k = 0; k < m; ++k) out[pivot_slot[k]] = w[k];
    for (const auto& e : etas) {
      const double t = out[e.slot] / e.pivot;
      out[e.slot] = t;
      if (t == 0.0) continue;
      for (const auto& [s, v] : e.rest) out[s] -= v * t;
    }
  }

  // BTRAN: y = B^{-T} c, c dense in slot space; result dense in row space.
  void btran(const std::vector<double>& c, std::vector<double>& y) {
    std::vector<double>& s = work_slot;
    s = c;
    for (auto it = etas.rbegin(); it != etas.rend(); ++it) {
      double acc = s[it->slot];
      for (const auto& [sl, v] : it->rest) acc -= v * s[sl];
      s[it->slot] = acc / it->pivot;
    }
    std::vector<double>& w = work_pivot;
    for (int k = 0; k < m; ++k) w[k] = s[pivot_slot[k]];
    for (int k = 0; k < m; ++k) {
      double acc = w[k];
      for (const auto& [p, v] : ucol[k]) acc -= v * w[p];
      w[k] = acc / udiag[k];
    }
    for (int p = m - 1; p >= 0; --p) {
      double acc = w[p];
      for (const auto& [i, v] : lcol[p]) acc -= v * w[i];
      w[p] = acc;
    }
    for (int k = 0; k < m; ++k) y[pivot_row[k]] = w[k];
  }

  void push_eta(int slot, const std::vector<double>& w) {
    Eta e;
    e.slot = slot;
    e.pivot = w[slot];
    for (int s = 0; s < m; ++s)
      if (s != slot && w[s] != 0.0) e.rest.push_back({s, w[s]});
    eta_nnz += static_cast<long>(e.rest.size() + 1);
    etas.push_back(std::move(e));
  }

  bool need_refactor() const {
    return static_cast<int>(etas.size()) >= 64 || eta_nnz > std::max<long>(2000, 2 * lu_nnz);
  }

  // recompute basic values from scratch
  void recompute_basics() {
    std::vector<std::pair<int, double>> rhs_entries;
    std::vector<double>& acc = dense_row;
    std::fill(acc.begin(), acc.end(), 0.0);
    for (int j = 0; j < N; ++j) {
      if (state[j] == VarState::Basic || xval[j] == 0.0) continue;
      for_col(j, [&](int row, double v) { acc[row] -= v * xval[j]; });
    }
    rhs_entries.reserve(m);
    for (int i = 0; i < m; ++i) {
      if (acc[i] != 0.0) rhs_entries.push_back({i, acc[i]});
      acc[i] = 0.0;
    }
    std::vector<double> xb(m, 0.0);
    ftran(rhs_entries, xb);
    for (int s = 0; s < m; ++s) xval[basic[s]] = xb[s];
  }

  double infeas_of(int var) const {
    const double v = xval[var];
    if (v < lb[var] - feas_tol) return lb[var] - v;
    if (v > ub[var] + feas_tol) return v - ub[var];
    return 0.0;
  }

  LpResult run(const std::vector<double>& use_lb, const std::vector<double>& use_ub) {
    lb = use_lb;
    ub = use_ub;
    lb.resize(N);
    ub.resize(N);
    for (int i = 0; i < m; ++i) {
      lb[n + i] = model_lb[n + i];
      ub[n + i] = model_ub[n + i];
    }
    for (int j = 0; j < N; ++j)
      if (lb[j] > ub[j] + 1e-12) return LpResult{LpStatus::Infeasible, 0.0, {}, 0};

    // initial basis: logicals basic, structurals at the finite bound nearest zero
    for (int j = 0; j < N; ++j) basis_slot[j] = -1;
    for (int i = 0; i < m; ++i) {
      basic[i] = n + i;
      basis_slot[n + i] = i;
      state[n + i] = VarState::Basic;
    }
    for (int j = 0; j < n; ++j) {
      const bool lf = std::isfinite(lb[j]), uf = std::isfinite(ub[j]);
      if (lf && uf)
        state[j] = std::abs(lb[j]) <= std::abs(ub[j]) ? VarState::AtLower : VarState::AtUpper;
      else if (lf)
        state[j] = VarState::AtLower;
      else if (uf)
        state[j] = VarState::AtUpper;
      else
        state[j] = VarState::FreeZero;
      xval[j] = state[j] == VarState::AtLower ? lb[j]
                : state[j] == VarState::AtUpper ? ub[j]
                                                : 0.0;
    }
    if (!factorize()) return LpResult{LpStatus::Singular, 0.0, {}, 0};
    recompute_basics();

    const long max_iters = std::max<long>(50000, 60L * (m + n));
    long iters = 0;
    int degen_run = 0;
    bool bland = false;
    double last_progress_obj = milp::kInf;
    std::vector<double> cb(m, 0.0), y(m, 0.0), w(m, 0.0);

    while (true) {
      if (++iters > max_iters) return LpResult{LpStatus::IterLimit, 0.0, {}, iters};

      // phase detection and basic cost vector
      double total_infeas = 0.0;
      for (int s = 0; s < m; ++s) total_infeas += infeas_of(basic[s]);
      const bool phase1 = total_infeas > feas_tol;
      for (int s = 0; s < m; ++s) {
        const int b = basic[s];
        if (phase1) {
          const double v = xval[b];
          cb[s] = v < lb[b] - feas_tol ? -1.0 : (v > ub[b] + feas_tol ? 1.0 : 0.0);
        } else {
          cb[s] = cost[b];
        }
      }
      btran(cb, y);

      // pricing
      int enter = -1;
      double enter_d = 0.0, best_score = 0.0;
      for (int j = 0; j < N; ++j) {
        if (state[j] == VarState::Basic) continue;
        double dot = 0.0;
        if (j < n) {
          for (int k = col_start[j]; k < col_start[j + 1]; ++k)
            dot += col_val[k] * y[col_row[k]];
        } else {
          dot = -y[j - n];
        }
        const double cj = phase1 ? 0.0 : cost[j];
        const double d = cj - dot;
        bool eligible = false;
        if (state[j] == VarState::AtLower && d < -opt_tol && ub[j] > lb[j]) eligible = true;
        else if (state[j] == VarState::AtUpper && d > opt_tol && ub[j] > lb[j]) eligible = true;
        else if (state[j] == VarState::FreeZero && std::abs(d) > opt_tol) eligible = true;
        if (!eligible) continue;
        if (bland) {
          enter = j;
          enter_d = d;
          break;
        }
        const double score = std::abs(d);
        if (score > best_score + 1e-15) {
          best_score = score;
          enter = j;
          enter_d = d;
        }
      }

      if (enter < 0) {
        if (phase1) return LpResult{LpStatus::Infeasible, 0.0, {}, iters};
        // optimal
        LpResult res;
        res.status = LpStatus::Optimal;
        res.iterations = iters;
        res.values.assign(n, 0.0);
        double obj = 0.0;
        for (int j = 0; j < n; ++j) {
          res.values[j] = xval[j];
          obj += cost[j] * xval[j];
        }
        res.objective = obj;
        return res;
      }

      const double sigma =
          (state[enter] == VarState::AtUpper || (state[enter] == VarState::FreeZero && enter_d > 0))
              ? -1.0
              : 1.0;

      std::vector<std::pair<int, double>> acol;
      for_col(enter, [&](int row, double v) { acol.push_back({row, v}); });
      ftran(acol, w);

      // ratio test
      double own_range = ub[enter] - lb[enter];  // inf for free vars
      double tmax = milp::kInf;
      int leave_slot = -1;
      double leave_pivot = 0.0;
      double leave_to_bound = 0.0;
      for (int s = 0; s < m; ++s) {
        const double ws = w[s];
        if (std::abs(ws) <= kPivTol) continue;
        const int b = basic[s];
        const double rate = -sigma * ws;  // dx_b / dt
        const double v = xval[b];
        double limit = milp::kInf;
        double to_bound = 0.0;
        if (phase1 && v < lb[b] - feas_tol) {
          if (rate > 0) {  // rising toward its violated lower bound
            limit = (lb[b] - v) / rate;
            to_bound = lb[b];
          }
        } else if (phase1 && v > ub[b] + feas_tol) {
          if (rate < 0) {
            limit = (v - ub[b]) / (-rate);
            to_bound = ub[b];
          }
        } else {
          if (rate > 0 && std::isfinite(ub[b])) {
            limit = std::max(0.0, (ub[b] - v) / rate);
            to_bound = ub[b];
          } else if (rate < 0 && std::isfinite(lb[b])) {
            limit = std::max(0.0, (v - lb[b]) / (-rate));
            to_bound = lb[b];
          }
        }
        if (limit == milp::kInf) continue;
        bool better;
        if (leave_slot < 0) {
          better = limit < tmax;
        } else if (bland) {
          better = limit < tmax - 1e-12 ||
                   (limit <= tmax + 1e-12 && basic[s] < basic[leave_slot]);
        } else {
          better = limit < tmax - 1e-12 ||
                   (limit <= tmax + 1e-12 && std::abs(ws) > std::abs(leave_pivot) + 1e-15);
        }
        if (better) {
          tmax = std::max(0.0, limit);
          leave_slot = s;
          leave_pivot = ws;
          leave_to_bound = to_bound;
        }
      }

      if (!std::isfinite(tmax) && !std::isfinite(own_range)) {
        if (phase1) return LpResult{LpStatus::Singular, 0.0, {}, iters};
        return LpResult{LpStatus::Unbounded, 0.0, {}, iters};
      }

      if (own_range <= tmax) {
        // bound flip, no basis change
        const double t = own_range;
        for (int s = 0; s < m; ++s)
          if (w[s] != 0.0) xval[basic[s]] -= sigma * t * w[s];
        xval[enter] += sigma * t;
        state[enter] = sigma > 0 ? VarState::AtUpper : VarState::AtLower;
        if (t <= kDegenStep) ++degen_run; else degen_run = 0;
        continue;
      }

      const double t = tmax;
      for (int s = 0; s < m; ++s)
        if (w[s] != 0.0) xval[basic[s]] -= sigma * t * w[s];
      const double enter_val = xval[enter] + sigma * t;
      const int leave_var = basic[leave_slot];
      xval[leave_var] = leave_to_bound;
      state[leave_var] = leave_to_bound == lb[leave_var] ? VarState::AtLower : VarState::AtUpper;
      if (!std::isfinite(leave_to_bound)) state[leave_var] = VarState::FreeZero;
      basic[leave_slot] = enter;
      basis_slot[enter] = leave_slot;
      basis_slot[leave_var] = -1;
      state[enter] = VarState::Basic;
      xval[enter] = enter_val;

      push_eta(leave_slot, w);
      if (need_refactor()) {
        if (!factorize()) return LpResult{LpStatus::Singular, 0.0, {}, iters};
        recompute_basics();
      }

      if (t <= kDegenStep) {
        if (++degen_run >= kBlandTrigger) bland = true;
      } else {
        degen_run = 0;
        if (bland) {
          // leave Bland mode once real progress resumes
          double obj = 0.0;
          for (int j = 0; j < N; ++j)
            if (state[j] == VarState::Basic || xval[j] != 0.0) obj += cost[j] * xval[j];
          if (obj < last_progress_obj - 1e-12) {
            bland = false;
            last_progress_obj = obj;
          }
        }
      }
    }
  }
};

SimplexSolver::SimplexSolver(const milp::MilpModel& model, double feas_tol, double opt_tol)
    : impl_(std::make_unique<Impl>(model, feas_tol, opt_tol)) {}

SimplexSolver::~SimplexSolver() = default;

int SimplexSolver::num_structural() const { return impl_->n; }

LpResult SimplexSolver::solve() {
  std::vector<double> l(impl_->model_lb.begin(), impl_->model_lb.begin() + impl_->n);
  std::vector<double> u(impl_->model_ub.begin(), impl_->model_ub.begin() + impl_->n);
  return impl_->run(l, u);
}

LpResult SimplexSolver::solve_with_bounds(const std::vector<double>& lb,
                                          const std::vector<double>& ub) {
  if (static_cast<int>(lb.size()) != impl_->n || static_cast<int>(ub.size()) != impl_->n)
    throw std::invalid_argument("solve_with_bounds: bound vectors must cover all variables");
  return impl_->run(lb, ub);
}

LpResult solve_lp(const milp::MilpModel& model, double feas_tol, double opt_tol) {
  SimplexSolver solver(model, feas_tol, opt_tol);
  return solver.solve();
}

}  // namespace fleet::solver
