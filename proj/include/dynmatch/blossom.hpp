#ifndef DYNMATCH_BLOSSOM_HPP_
#define DYNMATCH_BLOSSOM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dynmatch/step_task.hpp"
#include "dynmatch/types.hpp"

namespace dynmatch {

/// Primal-dual maximum weight matching on general graphs (Edmonds' blossom
/// method in the O(n^3) formulation due to Galil, structured after Joris van
/// Rantwijk's public-domain mwmatching).
///
/// Each stage grows alternating trees from every free vertex and either
/// augments once or proves optimality. Between stages the dual objective is an
/// upper bound on the optimum, so the solver can stop as soon as
/// (1 + eps) * w(M) reaches that bound. With eps = 0 it runs to optimality.
///
/// Vertex indices are dense [0, n). Integer weights keep every dual integral:
/// vertex duals are stored doubled, blossom duals are stored as is.
class BlossomSolver {
public:
    struct LocalEdge {
        int i;
        int j;
        Weight w;
    };

    BlossomSolver(int nvertex, std::vector<LocalEdge> edges)
        : n_(nvertex), edges_(std::move(edges)) {
        const int nedge = static_cast<int>(edges_.size());
        Weight maxweight = 0;
        for (const auto& e : edges_) maxweight = std::max(maxweight, e.w);
        endpoint_.resize(2 * nedge);
        neighbend_.assign(n_, {});
        for (int k = 0; k < nedge; ++k) {
            endpoint_[2 * k] = edges_[k].i;
            endpoint_[2 * k + 1] = edges_[k].j;
            neighbend_[edges_[k].i].push_back(2 * k + 1);
            neighbend_[edges_[k].j].push_back(2 * k);
        }
        mate_.assign(n_, -1);
        label_.assign(2 * n_, 0);
        labelend_.assign(2 * n_, -1);
        inblossom_.resize(n_);
        for (int v = 0; v < n_; ++v) inblossom_[v] = v;
        blossomparent_.assign(2 * n_, -1);
        blossomchilds_.assign(2 * n_, {});
        blossombase_.assign(2 * n_, -1);
        for (int v = 0; v < n_; ++v) blossombase_[v] = v;
        blossomendps_.assign(2 * n_, {});
        bestedge_.assign(2 * n_, -1);
        blossombestedges_.assign(2 * n_, {});
        hasbestedges_.assign(2 * n_, 0);
        for (int b = n_; b < 2 * n_; ++b) unusedblossoms_.push_back(b);
        dualvar_.assign(2 * n_, 0);
        for (int v = 0; v < n_; ++v) dualvar_[v] = maxweight;
        allowedge_.assign(nedge, 0);
    }

    BlossomSolver(const BlossomSolver&) = delete;
    BlossomSolver& operator=(const BlossomSolver&) = delete;

    /// Runs stages until optimal or until the dual bound certifies eps.
    StepTask<Unit> solve(double eps) {
        for (int stage = 0; stage < n_; ++stage) {
            std::fill(label_.begin(), label_.end(), 0);
            std::fill(bestedge_.begin(), bestedge_.end(), -1);
            for (int b = n_; b < 2 * n_; ++b) {
                blossombestedges_[b].clear();
                hasbestedges_[b] = 0;
            }
            std::fill(allowedge_.begin(), allowedge_.end(), 0);
            queue_.clear();
            for (int v = 0; v < n_; ++v) {
                co_yield kStep;
                if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
            }

            bool augmented = false;
            while (true) {
                while (!queue_.empty() && !augmented) {
                    const int v = queue_.back();
                    queue_.pop_back();
                    for (const int p : neighbend_[v]) {
                        co_yield kStep;
                        const int k = p / 2;
                        const int w = endpoint_[p];
                        if (inblossom_[v] == inblossom_[w]) continue;
                        Weight kslack = 0;
                        if (!allowedge_[k]) {
                            kslack = slack(k);
                            if (kslack <= 0) allowedge_[k] = 1;
                        }
                        if (allowedge_[k]) {
                            if (label_[inblossom_[w]] == 0) {
                                assign_label(w, 2, p ^ 1);
                            } else if (label_[inblossom_[w]] == 1) {
                                const int base = scan_blossom(v, w);
                                if (base >= 0) {
                                    co_await add_blossom(base, k);
                                } else {
                                    augment_matching(k);
                                    augmented = true;
                                    break;
                                }
                            } else if (label_[w] == 0) {
                                label_[w] = 2;
                                labelend_[w] = p ^ 1;
                            }
                        } else if (label_[inblossom_[w]] == 1) {
                            const int b = inblossom_[v];
                            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) bestedge_[b] = k;
                        } else if (label_[w] == 0) {
                            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) bestedge_[w] = k;
                        }
                    }
                }
                if (augmented) break;

                // Dual adjustment.
                int deltatype = 1;
                Weight delta = 0;
                int deltaedge = -1;
                int deltablossom = -1;
                delta = *std::min_element(dualvar_.begin(), dualvar_.begin() + n_);
                for (int v = 0; v < n_; ++v) {
                    co_yield kStep;
                    if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
                        const Weight d = slack(bestedge_[v]);
                        if (d < delta) {
                            delta = d;
                            deltatype = 2;
                            deltaedge = bestedge_[v];
                        }
                    }
                }
                for (int b = 0; b < 2 * n_; ++b) {
                    co_yield kStep;
                    if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
                        const Weight d = slack(bestedge_[b]) / 2;
                        if (d < delta) {
                            delta = d;
                            deltatype = 3;
                            deltaedge = bestedge_[b];
                        }
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
                        dualvar_[b] < delta) {
                        delta = dualvar_[b];
                        deltatype = 4;
                        deltablossom = b;
                    }
                }
                for (int v = 0; v < n_; ++v) {
                    if (label_[inblossom_[v]] == 1) {
                        dualvar_[v] -= delta;
                    } else if (label_[inblossom_[v]] == 2) {
                        dualvar_[v] += delta;
                    }
                }
                for (int b = n_; b < 2 * n_; ++b) {
                    if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
                        if (label_[b] == 1) {
                            dualvar_[b] += delta;
                        } else if (label_[b] == 2) {
                            dualvar_[b] -= delta;
                        }
                    }
                }

                if (deltatype == 1) {
                    break;
                } else if (deltatype == 2) {
                    allowedge_[deltaedge] = 1;
                    int i = edges_[deltaedge].i;
                    int j = edges_[deltaedge].j;
                    if (label_[inblossom_[i]] == 0) std::swap(i, j);
                    queue_.push_back(i);
                } else if (deltatype == 3) {
                    allowedge_[deltaedge] = 1;
                    queue_.push_back(edges_[deltaedge].i);
                } else {
                    expand_blossom(deltablossom, false);
                }
            }

            if (!augmented) {
                optimal_ = true;
                break;
            }
            ++stages_;

            for (int b = n_; b < 2 * n_; ++b) {
                if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 &&
                    dualvar_[b] == 0) {
                    expand_blossom(b, true);
                }
            }

            if (eps > 0 && static_cast<long double>(matched_weight()) * 2 * (1 + static_cast<long double>(eps)) >=
                               static_cast<long double>(doubled_dual_bound())) {
                break;
            }
        }
        co_return Unit{};
    }

    /// mate[v] = matched partner or -1.
    std::vector<int> mates() const {
        std::vector<int> out(n_, -1);
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
        }
        return out;
    }

    /// Indices into the input edge list of the matched edges.
    std::vector<int> matched_edges() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v) {
            if (mate_[v] >= 0 && v < endpoint_[mate_[v]]) out.push_back(mate_[v] / 2);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Weight matched_weight() const {
        Weight total = 0;
        for (int k : matched_edges()) total += edges_[k].w;
        return total;
    }

    /// Twice the current dual objective; always >= 2 * optimum.
    Weight doubled_dual_bound() const {
        Weight total = 0;
        for (int v = 0; v < n_; ++v) total += dualvar_[v];
        for (int b = n_; b < 2 * n_; ++b) {
            if (blossombase_[b] >= 0) {
                total += dualvar_[b] * static_cast<Weight>(blossom_leaves(b).size() - 1);
            }
        }
        return total;
    }

    bool proved_optimal() const noexcept { return optimal_; }
    int stages() const noexcept { return stages_; }

private:
    Weight slack(int k) const {
        const auto& e = edges_[k];
        return dualvar_[e.i] + dualvar_[e.j] - 2 * e.w;
    }

    void collect_leaves(int b, std::vector<int>& out) const {
        if (b < n_) {
            out.push_back(b);
            return;
        }
        for (int t : blossomchilds_[b]) collect_leaves(t, out);
    }

    std::vector<int> blossom_leaves(int b) const {
        std::vector<int> out;
        collect_leaves(b, out);
        return out;
    }

    template <class V>
    static int at(const V& vec, int j) {
        const int len = static_cast<int>(vec.size());
        return vec[j < 0 ? j + len : j];
    }

    static int index_of(const std::vector<int>& vec, int x) {
        return static_cast<int>(std::find(vec.begin(), vec.end(), x) - vec.begin());
    }

    void assign_label(int w, int t, int p) {
        const int b = inblossom_[w];
        label_[w] = label_[b] = t;
        labelend_[w] = labelend_[b] = p;
        bestedge_[w] = bestedge_[b] = -1;
        if (t == 1) {
            collect_leaves(b, queue_);
        } else if (t == 2) {
            const int base = blossombase_[b];
            assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
        }
    }

    int scan_blossom(int v, int w) {
        std::vector<int> path;
        int base = -1;
        while (v != -1 || w != -1) {
            int b = inblossom_[v];
            if (label_[b] & 4) {
                base = blossombase_[b];
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

    StepTask<Unit> add_blossom(int base, int k) {
        int v = edges_[k].i;
        int w = edges_[k].j;
        const int bb = inblossom_[base];
        int bv = inblossom_[v];
        int bw = inblossom_[w];
        const int b = unusedblossoms_.back();
        unusedblossoms_.pop_back();
        blossombase_[b] = base;
        blossomparent_[b] = -1;
        blossomparent_[bb] = b;
        std::vector<int> path;
        std::vector<int> endps;
        while (bv != bb) {
            blossomparent_[bv] = b;
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
            blossomparent_[bw] = b;
            path.push_back(bw);
            endps.push_back(labelend_[bw] ^ 1);
            w = endpoint_[labelend_[bw]];
            bw = inblossom_[w];
        }
        blossomchilds_[b] = path;
        blossomendps_[b] = endps;
        label_[b] = 1;
        labelend_[b] = labelend_[bb];
        dualvar_[b] = 0;
        for (int leaf : blossom_leaves(b)) {
            if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
            inblossom_[leaf] = b;
        }

        std::vector<int> bestedgeto(2 * n_, -1);
        auto consider = [&](int kk) {
            int i = edges_[kk].i;
            int j = edges_[kk].j;
            if (inblossom_[j] == b) std::swap(i, j);
            const int bj = inblossom_[j];
            if (bj != b && label_[bj] == 1 &&
                (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
                bestedgeto[bj] = kk;
            }
        };
        for (const int sub : path) {
            if (!hasbestedges_[sub]) {
                for (int leaf : blossom_leaves(sub)) {
                    for (int p : neighbend_[leaf]) {
                        co_yield kStep;
                        consider(p / 2);
                    }
                }
            } else {
                for (int kk : blossombestedges_[sub]) {
                    co_yield kStep;
                    consider(kk);
                }
            }
            blossombestedges_[sub].clear();
            hasbestedges_[sub] = 0;
            bestedge_[sub] = -1;
        }
        auto& best = blossombestedges_[b];
        best.clear();
        for (int kk : bestedgeto) {
            if (kk != -1) best.push_back(kk);
        }
        hasbestedges_[b] = 1;
        bestedge_[b] = -1;
        for (int kk : best) {
            if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
        }
        co_return Unit{};
    }

    void expand_blossom(int b, bool endstage) {
        const std::vector<int> childs = blossomchilds_[b];
        for (int s : childs) {
            blossomparent_[s] = -1;
            if (s < n_) {
                inblossom_[s] = s;
            } else if (endstage && dualvar_[s] == 0) {
                expand_blossom(s, endstage);
            } else {
                for (int leaf : blossom_leaves(s)) inblossom_[leaf] = s;
            }
        }
        if (!endstage && label_[b] == 2) {
            const auto& endps = blossomendps_[b];
            const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
            int j = index_of(childs, entrychild);
            int jstep = 0;
            int endptrick = 0;
            if (j & 1) {
                j -= static_cast<int>(childs.size());
                jstep = 1;
                endptrick = 0;
            } else {
                jstep = -1;
                endptrick = 1;
            }
            int p = labelend_[b];
            while (j != 0) {
                label_[endpoint_[p ^ 1]] = 0;
                label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
                assign_label(endpoint_[p ^ 1], 2, p);
                allowedge_[at(endps, j - endptrick) / 2] = 1;
                j += jstep;
                p = at(endps, j - endptrick) ^ endptrick;
                allowedge_[p / 2] = 1;
                j += jstep;
            }
            int bv = at(childs, j);
            label_[endpoint_[p ^ 1]] = label_[bv] = 2;
            labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
            bestedge_[bv] = -1;
            j += jstep;
            while (at(childs, j) != entrychild) {
                bv = at(childs, j);
                if (label_[bv] == 1) {
                    j += jstep;
                    continue;
                }
                int reached = -1;
                for (int leaf : blossom_leaves(bv)) {
                    if (label_[leaf] != 0) {
                        reached = leaf;
                        break;
                    }
                }
                if (reached != -1) {
                    label_[reached] = 0;
                    label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
                    assign_label(reached, 2, labelend_[reached]);
                }
                j += jstep;
            }
        }
        label_[b] = labelend_[b] = -1;
        blossomchilds_[b].clear();
        blossomendps_[b].clear();
        blossombase_[b] = -1;
        blossombestedges_[b].clear();
        hasbestedges_[b] = 0;
        bestedge_[b] = -1;
        unusedblossoms_.push_back(b);
    }

    void augment_blossom(int b, int v) {
        int t = v;
        while (blossomparent_[t] != b) t = blossomparent_[t];
        if (t >= n_) augment_blossom(t, v);
        auto& childs = blossomchilds_[b];
        auto& endps = blossomendps_[b];
        const int i = index_of(childs, t);
        int j = i;
        int jstep = 0;
        int endptrick = 0;
        if (i & 1) {
            j -= static_cast<int>(childs.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        while (j != 0) {
            j += jstep;
            t = at(childs, j);
            const int p = at(endps, j - endptrick) ^ endptrick;
            if (t >= n_) augment_blossom(t, endpoint_[p]);
            j += jstep;
            t = at(childs, j);
            if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
            mate_[endpoint_[p]] = p ^ 1;
            mate_[endpoint_[p ^ 1]] = p;
        }
        std::rotate(childs.begin(), childs.begin() + i, childs.end());
        std::rotate(endps.begin(), endps.begin() + i, endps.end());
        blossombase_[b] = blossombase_[childs[0]];
    }

    void augment_matching(int k) {
        const std::pair<int, int> starts[2] = {{edges_[k].i, 2 * k + 1}, {edges_[k].j, 2 * k}};
        for (auto [s, p] : starts) {
            while (true) {
                const int bs = inblossom_[s];
                if (bs >= n_) augment_blossom(bs, s);
                mate_[s] = p;
                if (labelend_[bs] == -1) break;
                const int t = endpoint_[labelend_[bs]];
                const int bt = inblossom_[t];
                s = endpoint_[labelend_[bt]];
                const int j = endpoint_[labelend_[bt] ^ 1];
                if (bt >= n_) augment_blossom(bt, j);
                mate_[j] = labelend_[bt];
                p = labelend_[bt] ^ 1;
            }
        }
    }

    int n_;
    std::vector<LocalEdge> edges_;
    std::vector<int> endpoint_;
    std::vector<std::vector<int>> neighbend_;
    std::vector<int> mate_;
    std::vector<int> label_;
    std::vector<int> labelend_;
    std::vector<int> inblossom_;
    std::vector<int> blossomparent_;
    std::vector<std::vector<int>> blossomchilds_;
    std::vector<int> blossombase_;
    std::vector<std::vector<int>> blossomendps_;
    std::vector<int> bestedge_;
    std::vector<std::vector<int>> blossombestedges_;
    std::vector<char> hasbestedges_;
    std::vector<int> unusedblossoms_;
    std::vector<Weight> dualvar_;
    std::vector<char> allowedge_;
    std::vector<int> queue_;
    bool optimal_ = false;
    int stages_ = 0;
};

}  // namespace dynmatch

#endif  // DYNMATCH_BLOSSOM_HPP_
