// Copyright 2026 The matchgame Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHGAME_SRC_BLOSSOM_HPP_
#define MATCHGAME_SRC_BLOSSOM_HPP_

// Maximum-weight (not necessarily perfect) matching in general graphs by
// Edmonds' blossom algorithm with dual updates, after Galil's O(n^3) variant
// as laid out in Van Rantwijk's reference implementation. The weight type
// only needs an ordered group structure plus halving, so exact rationals and
// lexicographic pairs both work.

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace matchgame::internal {

template <typename W>
struct BlossomEdge {
  int u;
  int v;
  W w;
};

template <typename W>
struct BlossomResult {
  std::vector<int> mate;  // partner vertex or -1
  // Vertex duals are stored doubled: the edge slack is
  // dual[u] + dual[v] - 2 w(uv) + 2 * sum of enclosing blossom duals.
  std::vector<W> vertex_dual2;
  std::vector<std::vector<int>> blossoms;  // leaf sets of nontrivial blossoms
  std::vector<W> blossom_dual;
};

template <typename W, typename HalfFn>
class BlossomMatcher {
 public:
  BlossomMatcher(int n, std::vector<BlossomEdge<W>> edges, HalfFn half)
      : n_(n), edges_(std::move(edges)), half_(half) {}

  BlossomResult<W> Run() {
    Init();
    if (!edges_.empty()) MainLoop();
    BlossomResult<W> out;
    out.mate.assign(n_, -1);
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] >= 0) out.mate[v] = endpoint_[mate_[v]];
    }
    out.vertex_dual2.assign(dual_.begin(), dual_.begin() + n_);
    for (int b = n_; b < 2 * n_; ++b) {
      if (base_[b] < 0) continue;
      std::vector<int> leaves;
      Leaves(b, leaves);
      std::sort(leaves.begin(), leaves.end());
      out.blossoms.push_back(std::move(leaves));
      out.blossom_dual.push_back(dual_[b]);
    }
    return out;
  }

 private:
  W Slack(int k) const {
    const auto& e = edges_[k];
    return dual_[e.u] + dual_[e.v] - e.w - e.w;
  }

  static int At(const std::vector<int>& v, int j) {
    const int s = static_cast<int>(v.size());
    return v[((j % s) + s) % s];
  }

  void Init() {
    const int m = static_cast<int>(edges_.size());
    W maxweight{};
    for (const auto& e : edges_) {
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_ || e.u == e.v)
        throw std::invalid_argument("blossom: bad edge");
      if (maxweight < e.w) maxweight = e.w;
    }
    endpoint_.resize(2 * m);
    for (int p = 0; p < 2 * m; ++p)
      endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
    neighbend_.assign(n_, {});
    for (int k = 0; k < m; ++k) {
      neighbend_[edges_[k].u].push_back(2 * k + 1);
      neighbend_[edges_[k].v].push_back(2 * k);
    }
    mate_.assign(n_, -1);
    label_.assign(2 * n_, 0);
    labelend_.assign(2 * n_, -1);
    inblossom_.resize(n_);
    for (int v = 0; v < n_; ++v) inblossom_[v] = v;
    parent_.assign(2 * n_, -1);
    childs_.assign(2 * n_, {});
    base_.assign(2 * n_, -1);
    for (int v = 0; v < n_; ++v) base_[v] = v;
    endps_.assign(2 * n_, {});
    bestedge_.assign(2 * n_, -1);
    best_edges_.assign(2 * n_, {});
    has_best_edges_.assign(2 * n_, 0);
    unused_.clear();
    for (int b = n_; b < 2 * n_; ++b) unused_.push_back(b);
    dual_.assign(2 * n_, W{});
    for (int v = 0; v < n_; ++v) dual_[v] = maxweight;
    allowedge_.assign(m, 0);
    queue_.clear();
  }

  void Leaves(int b, std::vector<int>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (int t : childs_[b]) Leaves(t, out);
  }

  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }

  void AssignLabel(int w, int t, int p) {
    const int b = inblossom_[w];
    label_[w] = label_[b] = t;
    labelend_[w] = labelend_[b] = p;
    bestedge_[w] = bestedge_[b] = -1;
    if (t == 1) {
      Leaves(b, queue_);
    } else if (t == 2) {
      const int base = base_[b];
      AssignLabel(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
    }
  }

  int ScanBlossom(int v, int w) {
    std::vector<int> path;
    int base = -1;
    while (v != -1 || w != -1) {
      int b = inblossom_[v];
      if (label_[b] & 4) {
        base = base_[b];
        break;
      }
      path.push_back(b);
      label_[b] = 5;
      if (labelend_[b] == -1) {
        v = -1;
      } else {
        v = endpoint_[labelend_[b]];
        b = inblossom_[v];
        v = endpoint_[labelend_[b]];
      }
      if (w != -1) std::swap(v, w);
    }
    for (int b : path) label_[b] = 1;
    return base;
  }

  void AddBlossom(int base, int k) {
    int v = edges_[k].u;
    int w = edges_[k].v;
    const int bb = inblossom_[base];
    int bv = inblossom_[v];
    int bw = inblossom_[w];
    const int b = unused_.back();
    unused_.pop_back();
    base_[b] = base;
    parent_[b] = -1;
    parent_[bb] = b;
    std::vector<int> path;
    std::vector<int> endps;
    while (bv != bb) {
      parent_[bv] = b;
      path.push_back(bv);
      endps.push_back(labelend_[bv]);
      v = endpoint_[labelend_[bv]];
      bv = inblossom_[v];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
      parent_[bw] = b;
      path.push_back(bw);
      endps.push_back(labelend_[bw] ^ 1);
      w = endpoint_[labelend_[bw]];
      bw = inblossom_[w];
    }
    childs_[b] = path;
    endps_[b] = endps;
    label_[b] = 1;
    labelend_[b] = labelend_[bb];
    dual_[b] = W{};
    for (int leaf : Leaves(b)) {
      if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
      inblossom_[leaf] = b;
    }
    std::vector<int> bestedgeto(2 * n_, -1);
    for (int sub : path) {
      std::vector<std::vector<int>> nblists;
      if (!has_best_edges_[sub]) {
        for (int leaf : Leaves(sub)) {
          std::vector<int> list;
          for (int p : neighbend_[leaf]) list.push_back(p / 2);
          nblists.push_back(std::move(list));
        }
      } else {
        nblists.push_back(best_edges_[sub]);
      }
      for (const auto& nblist : nblists) {
        for (int kk : nblist) {
          int j = edges_[kk].v;
          if (inblossom_[j] == b) j = edges_[kk].u;
          const int bj = inblossom_[j];
          if (bj != b && label_[bj] == 1 &&
              (bestedgeto[bj] == -1 || Slack(kk) < Slack(bestedgeto[bj]))) {
            bestedgeto[bj] = kk;
          }
        }
      }
      best_edges_[sub].clear();
      has_best_edges_[sub] = 0;
      bestedge_[sub] = -1;
    }
    best_edges_[b].clear();
    for (int kk : bestedgeto) {
      if (kk != -1) best_edges_[b].push_back(kk);
    }
    has_best_edges_[b] = 1;
    bestedge_[b] = -1;
    for (int kk : best_edges_[b]) {
      if (bestedge_[b] == -1 || Slack(kk) < Slack(bestedge_[b])) bestedge_[b] = kk;
    }
  }

  void ExpandBlossom(int b, bool endstage) {
    for (int s : childs_[b]) {
      parent_[s] = -1;
      if (s < n_) {
        inblossom_[s] = s;
      } else if (endstage && dual_[s] == W{}) {
        ExpandBlossom(s, endstage);
      } else {
        for (int leaf : Leaves(s)) inblossom_[leaf] = s;
      }
    }
    if (!endstage && label_[b] == 2) {
      const auto& children = childs_[b];
      const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
      int j = static_cast<int>(
          std::find(children.begin(), children.end(), entrychild) - children.begin());
      int jstep;
      int endptrick;
      if (j & 1) {
        j -= static_cast<int>(children.size());
        jstep = 1;
        endptrick = 0;
      } else {
        jstep = -1;
        endptrick = 1;
      }
      int p = labelend_[b];
      while (j != 0) {
        label_[endpoint_[p ^ 1]] = 0;
        label_[endpoint_[At(endps_[b], j - endptrick) ^ endptrick ^ 1]] = 0;
        AssignLabel(endpoint_[p ^ 1], 2, p);
        allowedge_[At(endps_[b], j - endptrick) / 2] = 1;
        j += jstep;
        p = At(endps_[b], j - endptrick) ^ endptrick;
        allowedge_[p / 2] = 1;
        j += jstep;
      }
      int bv = At(children, j);
      label_[endpoint_[p ^ 1]] = label_[bv] = 2;
      labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
      bestedge_[bv] = -1;
      j += jstep;
      while (At(children, j) != entrychild) {
        bv = At(children, j);
        if (label_[bv] == 1) {
          j += jstep;
          continue;
        }
        int found = -1;
        for (int leaf : Leaves(bv)) {
          if (label_[leaf] != 0) {
            found = leaf;
            break;
          }
        }
        if (found >= 0) {
          label_[found] = 0;
          label_[endpoint_[mate_[base_[bv]]]] = 0;
          AssignLabel(found, 2, labelend_[found]);
        }
        j += jstep;
      }
    }
    label_[b] = labelend_[b] = -1;
    childs_[b].clear();
    endps_[b].clear();
    base_[b] = -1;
    best_edges_[b].clear();
    has_best_edges_[b] = 0;
    bestedge_[b] = -1;
    unused_.push_back(b);
  }

  void AugmentBlossom(int b, int v) {
    int t = v;
    while (parent_[t] != b) t = parent_[t];
    if (t >= n_) AugmentBlossom(t, v);
    auto& children = childs_[b];
    const int i = static_cast<int>(
        std::find(children.begin(), children.end(), t) - children.begin());
    int j = i;
    int jstep;
    int endptrick;
    if (i & 1) {
      j -= static_cast<int>(children.size());
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    while (j != 0) {
      j += jstep;
      t = At(children, j);
      const int p = At(endps_[b], j - endptrick) ^ endptrick;
      if (t >= n_) AugmentBlossom(t, endpoint_[p]);
      j += jstep;
      t = At(children, j);
      if (t >= n_) AugmentBlossom(t, endpoint_[p ^ 1]);
      mate_[endpoint_[p]] = p ^ 1;
      mate_[endpoint_[p ^ 1]] = p;
    }
    std::rotate(children.begin(), children.begin() + i, children.end());
    std::rotate(endps_[b].begin(), endps_[b].begin() + i, endps_[b].end());
    base_[b] = base_[children[0]];
  }

  void AugmentMatching(int k) {
    const int v = edges_[k].u;
    const int w = edges_[k].v;
    const int starts[2][2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (const auto& start : starts) {
      int s = start[0];
      int p = start[1];
      while (true) {
        const int bs = inblossom_[s];
        if (bs >= n_) AugmentBlossom(bs, s);
        mate_[s] = p;
        if (labelend_[bs] == -1) break;
        const int t = endpoint_[labelend_[bs]];
        const int bt = inblossom_[t];
        s = endpoint_[labelend_[bt]];
        const int j = endpoint_[labelend_[bt] ^ 1];
        if (bt >= n_) AugmentBlossom(bt, j);
        mate_[j] = labelend_[bt];
        p = labelend_[bt] ^ 1;
      }
    }
  }

  void MainLoop() {
    for (int stage = 0; stage < n_; ++stage) {
      std::fill(label_.begin(), label_.end(), 0);
      std::fill(bestedge_.begin(), bestedge_.end(), -1);
      for (int b = n_; b < 2 * n_; ++b) {
        best_edges_[b].clear();
        has_best_edges_[b] = 0;
      }
      std::fill(allowedge_.begin(), allowedge_.end(), 0);
      queue_.clear();
      for (int v = 0; v < n_; ++v) {
        if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
      }
      bool augmented = false;
      while (true) {
        while (!queue_.empty() && !augmented) {
          const int v = queue_.back();
          queue_.pop_back();
          for (int p : neighbend_[v]) {
            const int k = p / 2;
            const int w = endpoint_[p];
            if (inblossom_[v] == inblossom_[w]) continue;
            W kslack{};
            if (!allowedge_[k]) {
              kslack = Slack(k);
              if (!(W{} < kslack)) allowedge_[k] = 1;
            }
            if (allowedge_[k]) {
              if (label_[inblossom_[w]] == 0) {
                AssignLabel(w, 2, p ^ 1);
              } else if (label_[inblossom_[w]] == 1) {
                const int base = ScanBlossom(v, w);
                if (base >= 0) {
                  AddBlossom(base, k);
                } else {
                  AugmentMatching(k);
                  augmented = true;
                  break;
                }
              } else if (label_[w] == 0) {
                label_[w] = 2;
                labelend_[w] = p ^ 1;
              }
            } else if (label_[inblossom_[w]] == 1) {
              const int b = inblossom_[v];
              if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) bestedge_[b] = k;
            } else if (label_[w] == 0) {
              if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) bestedge_[w] = k;
            }
          }
        }
        if (augmented) break;

        int deltatype = 1;
        W delta = dual_[0];
        for (int v = 1; v < n_; ++v) {
          if (dual_[v] < delta) delta = dual_[v];
        }
        int deltaedge = -1;
        int deltablossom = -1;
        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
            const W d = Slack(bestedge_[v]);
            if (d < delta) {
              delta = d;
              deltatype = 2;
              deltaedge = bestedge_[v];
            }
          }
        }
        for (int b = 0; b < 2 * n_; ++b) {
          if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
            const W d = half_(Slack(bestedge_[b]));
            if (d < delta) {
              delta = d;
              deltatype = 3;
              deltaedge = bestedge_[b];
            }
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 &&
              dual_[b] < delta) {
            delta = dual_[b];
            deltatype = 4;
            deltablossom = b;
          }
        }
        for (int v = 0; v < n_; ++v) {
          if (label_[inblossom_[v]] == 1) {
            dual_[v] = dual_[v] - delta;
          } else if (label_[inblossom_[v]] == 2) {
            dual_[v] = dual_[v] + delta;
          }
        }
        for (int b = n_; b < 2 * n_; ++b) {
          if (base_[b] >= 0 && parent_[b] == -1) {
            if (label_[b] == 1) {
              dual_[b] = dual_[b] + delta;
            } else if (label_[b] == 2) {
              dual_[b] = dual_[b] - delta;
            }
          }
        }
        if (deltatype == 1) {
          break;
        } else if (deltatype == 2) {
          allowedge_[deltaedge] = 1;
          int i = edges_[deltaedge].u;
          int j = edges_[deltaedge].v;
          if (label_[inblossom_[i]] == 0) std::swap(i, j);
          queue_.push_back(i);
        } else if (deltatype == 3) {
          allowedge_[deltaedge] = 1;
          queue_.push_back(edges_[deltaedge].u);
        } else {
          ExpandBlossom(deltablossom, false);
        }
      }
      if (!augmented) break;
      for (int b = n_; b < 2 * n_; ++b) {
        if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 && dual_[b] == W{})
          ExpandBlossom(b, true);
      }
    }
  }

  int n_;
  std::vector<BlossomEdge<W>> edges_;
  HalfFn half_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> childs_;
  std::vector<int> base_;
  std::vector<std::vector<int>> endps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> best_edges_;
  std::vector<char> has_best_edges_;
  std::vector<int> unused_;
  std::vector<W> dual_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

template <typename W, typename HalfFn>
BlossomResult<W> RunBlossom(int n, std::vector<BlossomEdge<W>> edges, HalfFn half) {
  return BlossomMatcher<W, HalfFn>(n, std::move(edges), half).Run();
}

}  // namespace matchgame::internal

#endif  // MATCHGAME_SRC_BLOSSOM_HPP_
