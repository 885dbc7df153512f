#include "itc/matching.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <tuple>

namespace itc {
namespace {

// Weighted general matching after Galil's O(n^3) primal-dual blossom
// method, in the formulation of J. van Rantwijk's mwmatching. Endpoint p of
// edge k is vertex edges[k][p % 2]; mate[] stores remote endpoints.
class Blossom {
public:
    Blossom(long nvertex, const std::vector<std::tuple<long, long, std::int64_t>>& edges, bool maxcard)
        : nv_(nvertex), edges_(edges), maxcard_(maxcard) {}

    std::vector<long> run();

private:
    using List = std::vector<long>;

    std::int64_t slack(long k) const {
        const auto& [i, j, w] = edges_[static_cast<std::size_t>(k)];
        return dual_[at(i)] + dual_[at(j)] - 2 * w;
    }
    static std::size_t at(long i) { return static_cast<std::size_t>(i); }
    // Python-style indexing into a cyclic child list.
    static long cyc(const List& l, long j) {
        const long n = static_cast<long>(l.size());
        return l[at(((j % n) + n) % n)];
    }

    void leaves(long b, List& out) const {
        if (b < nv_) {
            out.push_back(b);
            return;
        }
        for (long t : childs_[at(b)]) leaves(t, out);
    }
    List leaves(long b) const {
        List out;
        leaves(b, out);
        return out;
    }

    void assign_label(long w, int t, long p);
    long scan_blossom(long v, long w);
    void add_blossom(long base, long k);
    void expand_blossom(long b, bool endstage);
    void augment_blossom(long b, long v);
    void augment_matching(long k);

    long nv_;
    const std::vector<std::tuple<long, long, std::int64_t>>& edges_;
    bool maxcard_;

    List endpoint_;
    std::vector<List> neighbend_;
    List mate_, labelend_, inblossom_, parent_, base_, bestedge_, unused_, queue_;
    std::vector<int> label_;
    std::vector<List> childs_, endps_, bestedges_;
    std::vector<bool> has_bestedges_;
    std::vector<std::int64_t> dual_;
    std::vector<bool> allow_;
};

void Blossom::assign_label(long w, int t, long p) {
    const long b = inblossom_[at(w)];
    label_[at(w)] = label_[at(b)] = t;
    labelend_[at(w)] = labelend_[at(b)] = p;
    bestedge_[at(w)] = bestedge_[at(b)] = -1;
    if (t == 1) {
        leaves(b, queue_);
    } else if (t == 2) {
        const long base = base_[at(b)];
        assign_label(endpoint_[at(mate_[at(base)])], 1, mate_[at(base)] ^ 1);
    }
}

long Blossom::scan_blossom(long v, long w) {
    List path;
    long base = -1;
    while (v != -1 || w != -1) {
        long b = inblossom_[at(v)];
        if (label_[at(b)] & 4) {
            base = base_[at(b)];
            break;
        }
        path.push_back(b);
        label_[at(b)] = 5;
        if (labelend_[at(b)] == -1) {
            v = -1;
        } else {
            v = endpoint_[at(labelend_[at(b)])];
            b = inblossom_[at(v)];
            v = endpoint_[at(labelend_[at(b)])];
        }
        if (w != -1) std::swap(v, w);
    }
    for (long b : path) label_[at(b)] = 1;
    return base;
}

void Blossom::add_blossom(long base, long k) {
    auto [v, w, wt] = edges_[at(k)];
    (void)wt;
    const long bb = inblossom_[at(base)];
    long bv = inblossom_[at(v)];
    long bw = inblossom_[at(w)];
    const long b = unused_.back();
    unused_.pop_back();
    base_[at(b)] = base;
    parent_[at(b)] = -1;
    parent_[at(bb)] = b;
    List path, endps;
    while (bv != bb) {
        parent_[at(bv)] = b;
        path.push_back(bv);
        endps.push_back(labelend_[at(bv)]);
        v = endpoint_[at(labelend_[at(bv)])];
        bv = inblossom_[at(v)];
    }
    path.push_back(bb);
    std::reverse(path.begin(), path.end());
    std::reverse(endps.begin(), endps.end());
    endps.push_back(2 * k);
    while (bw != bb) {
        parent_[at(bw)] = b;
        path.push_back(bw);
        endps.push_back(labelend_[at(bw)] ^ 1);
        w = endpoint_[at(labelend_[at(bw)])];
        bw = inblossom_[at(w)];
    }
    childs_[at(b)] = path;
    endps_[at(b)] = endps;
    label_[at(b)] = 1;
    labelend_[at(b)] = labelend_[at(bb)];
    dual_[at(b)] = 0;
    for (long leaf : leaves(b)) {
        if (label_[at(inblossom_[at(leaf)])] == 2) queue_.push_back(leaf);
        inblossom_[at(leaf)] = b;
    }

    List bestedgeto(at(2 * nv_), -1);
    for (long sub : path) {
        std::vector<List> nblists;
        if (!has_bestedges_[at(sub)]) {
            for (long leaf : leaves(sub)) {
                List l;
                for (long p : neighbend_[at(leaf)]) l.push_back(p / 2);
                nblists.push_back(std::move(l));
            }
        } else {
            nblists.push_back(bestedges_[at(sub)]);
        }
        for (const auto& nblist : nblists)
            for (long kk : nblist) {
                auto [i, j, w2] = edges_[at(kk)];
                (void)w2;
                if (inblossom_[at(j)] == b) std::swap(i, j);
                const long bj = inblossom_[at(j)];
                if (bj != b && label_[at(bj)] == 1 &&
                    (bestedgeto[at(bj)] == -1 || slack(kk) < slack(bestedgeto[at(bj)])))
                    bestedgeto[at(bj)] = kk;
            }
        bestedges_[at(sub)].clear();
        has_bestedges_[at(sub)] = false;
        bestedge_[at(sub)] = -1;
    }
    List mine;
    for (long kk : bestedgeto)
        if (kk != -1) mine.push_back(kk);
    bestedges_[at(b)] = mine;
    has_bestedges_[at(b)] = true;
    bestedge_[at(b)] = -1;
    for (long kk : mine)
        if (bestedge_[at(b)] == -1 || slack(kk) < slack(bestedge_[at(b)])) bestedge_[at(b)] = kk;
}

void Blossom::expand_blossom(long b, bool endstage) {
    const List children = childs_[at(b)];
    for (long s : children) {
        parent_[at(s)] = -1;
        if (s < nv_) {
            inblossom_[at(s)] = s;
        } else if (endstage && dual_[at(s)] == 0) {
            expand_blossom(s, endstage);
        } else {
            for (long leaf : leaves(s)) inblossom_[at(leaf)] = s;
        }
    }
    if (!endstage && label_[at(b)] == 2) {
        const List& ch = childs_[at(b)];
        const List& ep = endps_[at(b)];
        const long entrychild = inblossom_[at(endpoint_[at(labelend_[at(b)] ^ 1)])];
        long j = static_cast<long>(std::find(ch.begin(), ch.end(), entrychild) - ch.begin());
        long jstep, endptrick;
        if (j & 1) {
            j -= static_cast<long>(ch.size());
            jstep = 1;
            endptrick = 0;
        } else {
            jstep = -1;
            endptrick = 1;
        }
        long p = labelend_[at(b)];
        while (j != 0) {
            label_[at(endpoint_[at(p ^ 1)])] = 0;
            label_[at(endpoint_[at(cyc(ep, j - endptrick) ^ endptrick ^ 1)])] = 0;
            assign_label(endpoint_[at(p ^ 1)], 2, p);
            allow_[at(cyc(ep, j - endptrick) / 2)] = true;
            j += jstep;
            p = cyc(ep, j - endptrick) ^ endptrick;
            allow_[at(p / 2)] = true;
            j += jstep;
        }
        long bv = cyc(ch, j);
        label_[at(endpoint_[at(p ^ 1)])] = label_[at(bv)] = 2;
        labelend_[at(endpoint_[at(p ^ 1)])] = labelend_[at(bv)] = p;
        bestedge_[at(bv)] = -1;
        j += jstep;
        while (cyc(ch, j) != entrychild) {
            bv = cyc(ch, j);
            if (label_[at(bv)] == 1) {
                j += jstep;
                continue;
            }
            long found = -1;
            for (long leaf : leaves(bv))
                if (label_[at(leaf)] != 0) {
                    found = leaf;
                    break;
                }
            if (found != -1) {
                label_[at(found)] = 0;
                label_[at(endpoint_[at(mate_[at(base_[at(bv)])])])] = 0;
                assign_label(found, 2, labelend_[at(found)]);
            }
            j += jstep;
        }
    }
    label_[at(b)] = -1;
    labelend_[at(b)] = -1;
    childs_[at(b)].clear();
    endps_[at(b)].clear();
    base_[at(b)] = -1;
    bestedges_[at(b)].clear();
    has_bestedges_[at(b)] = false;
    bestedge_[at(b)] = -1;
    unused_.push_back(b);
}

void Blossom::augment_blossom(long b, long v) {
    long t = v;
    while (parent_[at(t)] != b) t = parent_[at(t)];
    if (t >= nv_) augment_blossom(t, v);
    List& ch = childs_[at(b)];
    List& ep = endps_[at(b)];
    const long i = static_cast<long>(std::find(ch.begin(), ch.end(), t) - ch.begin());
    long j = i;
    long jstep, endptrick;
    if (i & 1) {
        j -= static_cast<long>(ch.size());
        jstep = 1;
        endptrick = 0;
    } else {
        jstep = -1;
        endptrick = 1;
    }
    while (j != 0) {
        j += jstep;
        t = cyc(ch, j);
        const long p = cyc(ep, j - endptrick) ^ endptrick;
        if (t >= nv_) augment_blossom(t, endpoint_[at(p)]);
        j += jstep;
        t = cyc(ch, j);
        if (t >= nv_) augment_blossom(t, endpoint_[at(p ^ 1)]);
        mate_[at(endpoint_[at(p)])] = p ^ 1;
        mate_[at(endpoint_[at(p ^ 1)])] = p;
    }
    std::rotate(ch.begin(), ch.begin() + i, ch.end());
    std::rotate(ep.begin(), ep.begin() + i, ep.end());
    base_[at(b)] = base_[at(ch[0])];
}

void Blossom::augment_matching(long k) {
    const auto& [v, w, wt] = edges_[at(k)];
    (void)wt;
    const std::pair<long, long> starts[2] = {{v, 2 * k + 1}, {w, 2 * k}};
    for (auto [s, p] : starts) {
        while (true) {
            const long bs = inblossom_[at(s)];
            if (bs >= nv_) augment_blossom(bs, s);
            mate_[at(s)] = p;
            if (labelend_[at(bs)] == -1) break;
            const long t = endpoint_[at(labelend_[at(bs)])];
            const long bt = inblossom_[at(t)];
            s = endpoint_[at(labelend_[at(bt)])];
            const long j = endpoint_[at(labelend_[at(bt)] ^ 1)];
            if (bt >= nv_) augment_blossom(bt, j);
            mate_[at(j)] = labelend_[at(bt)];
            p = labelend_[at(bt)] ^ 1;
        }
    }
}

std::vector<long> Blossom::run() {
    const long nedge = static_cast<long>(edges_.size());
    if (nv_ == 0) return {};
    std::int64_t maxweight = 0;
    for (const auto& [i, j, w] : edges_) {
        if (i < 0 || j < 0 || i >= nv_ || j >= nv_ || i == j) throw std::invalid_argument("max_weight_matching: bad edge");
        maxweight = std::max(maxweight, w);
    }
    const std::size_t n2 = at(2 * nv_);
    endpoint_.resize(at(2 * nedge));
    for (long p = 0; p < 2 * nedge; ++p) {
        const auto& e = edges_[at(p / 2)];
        endpoint_[at(p)] = (p % 2) ? std::get<1>(e) : std::get<0>(e);
    }
    neighbend_.assign(at(nv_), {});
    for (long k = 0; k < nedge; ++k) {
        const auto& [i, j, w] = edges_[at(k)];
        (void)w;
        neighbend_[at(i)].push_back(2 * k + 1);
        neighbend_[at(j)].push_back(2 * k);
    }
    mate_.assign(at(nv_), -1);
    label_.assign(n2, 0);
    labelend_.assign(n2, -1);
    inblossom_.resize(at(nv_));
    std::iota(inblossom_.begin(), inblossom_.end(), 0L);
    parent_.assign(n2, -1);
    childs_.assign(n2, {});
    base_.assign(n2, -1);
    for (long v = 0; v < nv_; ++v) base_[at(v)] = v;
    endps_.assign(n2, {});
    bestedge_.assign(n2, -1);
    bestedges_.assign(n2, {});
    has_bestedges_.assign(n2, false);
    unused_.clear();
    for (long b = nv_; b < 2 * nv_; ++b) unused_.push_back(b);
    dual_.assign(n2, 0);
    for (long v = 0; v < nv_; ++v) dual_[at(v)] = maxweight;
    allow_.assign(at(nedge), false);

    for (long stage = 0; stage < nv_; ++stage) {
        std::fill(label_.begin(), label_.end(), 0);
        std::fill(bestedge_.begin(), bestedge_.end(), -1);
        for (long b = nv_; b < 2 * nv_; ++b) {
            bestedges_[at(b)].clear();
            has_bestedges_[at(b)] = false;
        }
        std::fill(allow_.begin(), allow_.end(), false);
        queue_.clear();
        for (long v = 0; v < nv_; ++v)
            if (mate_[at(v)] == -1 && label_[at(inblossom_[at(v)])] == 0) assign_label(v, 1, -1);

        bool augmented = false;
        while (true) {
            while (!queue_.empty() && !augmented) {
                const long v = queue_.back();
                queue_.pop_back();
                for (long p : neighbend_[at(v)]) {
                    const long k = p / 2;
                    const long w = endpoint_[at(p)];
                    if (inblossom_[at(v)] == inblossom_[at(w)]) continue;
                    std::int64_t kslack = 0;
                    if (!allow_[at(k)]) {
                        kslack = slack(k);
                        if (kslack <= 0) allow_[at(k)] = true;
                    }
                    if (allow_[at(k)]) {
                        if (label_[at(inblossom_[at(w)])] == 0) {
                            assign_label(w, 2, p ^ 1);
                        } else if (label_[at(inblossom_[at(w)])] == 1) {
                            const long base = scan_blossom(v, w);
                            if (base >= 0) {
                                add_blossom(base, k);
                            } else {
                                augment_matching(k);
                                augmented = true;
                                break;
                            }
                        } else if (label_[at(w)] == 0) {
                            label_[at(w)] = 2;
                            labelend_[at(w)] = p ^ 1;
                        }
                    } else if (label_[at(inblossom_[at(w)])] == 1) {
                        const long b = inblossom_[at(v)];
                        if (bestedge_[at(b)] == -1 || kslack < slack(bestedge_[at(b)])) bestedge_[at(b)] = k;
                    } else if (label_[at(w)] == 0) {
                        if (bestedge_[at(w)] == -1 || kslack < slack(bestedge_[at(w)])) bestedge_[at(w)] = k;
                    }
                }
            }
            if (augmented) break;

            int deltatype = -1;
            std::int64_t delta = 0;
            long deltaedge = -1, deltablossom = -1;
            if (!maxcard_) {
                deltatype = 1;
                delta = *std::min_element(dual_.begin(), dual_.begin() + nv_);
            }
            for (long v = 0; v < nv_; ++v)
                if (label_[at(inblossom_[at(v)])] == 0 && bestedge_[at(v)] != -1) {
                    const std::int64_t d = slack(bestedge_[at(v)]);
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 2;
                        deltaedge = bestedge_[at(v)];
                    }
                }
            for (long b = 0; b < 2 * nv_; ++b)
                if (parent_[at(b)] == -1 && label_[at(b)] == 1 && bestedge_[at(b)] != -1) {
                    const std::int64_t d = slack(bestedge_[at(b)]) / 2;
                    if (deltatype == -1 || d < delta) {
                        delta = d;
                        deltatype = 3;
                        deltaedge = bestedge_[at(b)];
                    }
                }
            for (long b = nv_; b < 2 * nv_; ++b)
                if (base_[at(b)] >= 0 && parent_[at(b)] == -1 && label_[at(b)] == 2 &&
                    (deltatype == -1 || dual_[at(b)] < delta)) {
                    delta = dual_[at(b)];
                    deltatype = 4;
                    deltablossom = b;
                }
            if (deltatype == -1) {
                deltatype = 1;
                delta = std::max<std::int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + nv_));
            }

            for (long v = 0; v < nv_; ++v) {
                const int l = label_[at(inblossom_[at(v)])];
                if (l == 1)
                    dual_[at(v)] -= delta;
                else if (l == 2)
                    dual_[at(v)] += delta;
            }
            for (long b = nv_; b < 2 * nv_; ++b)
                if (base_[at(b)] >= 0 && parent_[at(b)] == -1) {
                    if (label_[at(b)] == 1)
                        dual_[at(b)] += delta;
                    else if (label_[at(b)] == 2)
                        dual_[at(b)] -= delta;
                }

            if (deltatype == 1) break;
            if (deltatype == 2) {
                allow_[at(deltaedge)] = true;
                auto [i, j, w] = edges_[at(deltaedge)];
                (void)w;
                if (label_[at(inblossom_[at(i)])] == 0) std::swap(i, j);
                queue_.push_back(i);
            } else if (deltatype == 3) {
                allow_[at(deltaedge)] = true;
                queue_.push_back(std::get<0>(edges_[at(deltaedge)]));
            } else if (deltatype == 4) {
                expand_blossom(deltablossom, false);
            }
        }
        if (!augmented) break;
        for (long b = nv_; b < 2 * nv_; ++b)
            if (parent_[at(b)] == -1 && base_[at(b)] >= 0 && label_[at(b)] == 1 && dual_[at(b)] == 0)
                expand_blossom(b, true);
    }
    for (long v = 0; v < nv_; ++v)
        if (mate_[at(v)] >= 0) mate_[at(v)] = endpoint_[at(mate_[at(v)])];
    return mate_;
}

void finish(Pairing& out, const MatchingProblem& problem) {
    std::sort(out.pairs.begin(), out.pairs.end());
    std::sort(out.to_boundary.begin(), out.to_boundary.end());
    out.total = 0;
    for (auto [i, j] : out.pairs) out.total += problem.weight(i, j);
    for (auto i : out.to_boundary) out.total += *problem.boundary[i];
}

}  // namespace

bool MatchingProblem::has_boundary() const {
    return std::any_of(boundary.begin(), boundary.end(), [](const auto& b) { return b.has_value(); });
}

void MatchingProblem::validate() const {
    if (weights.size() != n * n || boundary.size() != n) throw std::invalid_argument("MatchingProblem: size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (boundary[i] && *boundary[i] < 0) throw std::invalid_argument("MatchingProblem: negative boundary weight");
        for (std::size_t j = 0; j < n; ++j) {
            if (weight(i, j) != weight(j, i)) throw std::invalid_argument("MatchingProblem: asymmetric weights");
            if (i != j && weight(i, j) < 0) throw std::invalid_argument("MatchingProblem: negative weight");
        }
    }
    if (!has_boundary() && n % 2) throw std::invalid_argument("MatchingProblem: odd node count without boundary");
}

std::vector<long> max_weight_matching(std::size_t num_vertices,
                                      const std::vector<std::tuple<long, long, std::int64_t>>& edges,
                                      bool max_cardinality) {
    return Blossom(static_cast<long>(num_vertices), edges, max_cardinality).run();
}

Pairing solve(const MatchingProblem& problem) {
    problem.validate();
    Pairing out;
    const std::size_t n = problem.n;
    if (n == 0) return out;

    // Boundary terminals become twin vertices; twins pair freely among
    // themselves at zero cost, with one spare twin when parity demands it.
    std::vector<long> twin(n, -1);
    long nv = static_cast<long>(n);
    for (std::size_t i = 0; i < n; ++i)
        if (problem.boundary[i]) twin[i] = nv++;
    const long ntwins = nv - static_cast<long>(n);
    if (ntwins > 0 && nv % 2) ++nv;

    std::int64_t maxw = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) maxw = std::max(maxw, problem.weight(i, j));
        if (problem.boundary[i]) maxw = std::max(maxw, *problem.boundary[i]);
    }
    const std::int64_t top = maxw + 1;

    // Maximizing sum(top - w) over perfect matchings minimizes sum(w). The
    // edges are listed in lexicographic node order, which fixes tie-breaking.
    std::vector<std::tuple<long, long, std::int64_t>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(static_cast<long>(i), static_cast<long>(j), top - problem.weight(i, j));
    for (std::size_t i = 0; i < n; ++i)
        if (twin[i] >= 0) edges.emplace_back(static_cast<long>(i), twin[i], top - *problem.boundary[i]);
    for (long a = static_cast<long>(n); a < nv; ++a)
        for (long b = a + 1; b < nv; ++b) edges.emplace_back(a, b, top);

    const auto mate = max_weight_matching(static_cast<std::size_t>(nv), edges, true);
    for (std::size_t i = 0; i < n; ++i) {
        const long m = mate[i];
        if (m < 0) throw std::logic_error("solve: no perfect matching found");
        if (m < static_cast<long>(n)) {
            if (static_cast<long>(i) < m) out.pairs.emplace_back(i, static_cast<std::size_t>(m));
        } else {
            if (m != twin[i]) throw std::logic_error("solve: node matched to a foreign twin");
            out.to_boundary.push_back(i);
        }
    }
    finish(out, problem);
    return out;
}

Pairing brute_force(const MatchingProblem& problem) {
    problem.validate();
    if (problem.n > 10) throw std::invalid_argument("brute_force: at most 10 nodes");
    const std::size_t n = problem.n;
    std::vector<bool> used(n, false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<std::size_t> bnd;
    Pairing best;
    bool found = false;
    std::int64_t best_total = std::numeric_limits<std::int64_t>::max();

    auto recurse = [&](auto&& self, std::int64_t acc) -> void {
        std::size_t i = 0;
        while (i < n && used[i]) ++i;
        if (i == n) {
            if (!found || acc < best_total) {
                found = true;
                best_total = acc;
                best.pairs = pairs;
                best.to_boundary = bnd;
            }
            return;
        }
        used[i] = true;
        if (problem.boundary[i]) {
            bnd.push_back(i);
            self(self, acc + *problem.boundary[i]);
            bnd.pop_back();
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = true;
            pairs.emplace_back(i, j);
            self(self, acc + problem.weight(i, j));
            pairs.pop_back();
            used[j] = false;
        }
        used[i] = false;
    };
    recurse(recurse, 0);
    if (!found) throw std::invalid_argument("brute_force: infeasible problem");
    finish(best, problem);
    return best;
}

Pairing greedy(const MatchingProblem& problem) {
    problem.validate();
    const std::size_t n = problem.n;
    struct Candidate {
        std::int64_t w;
        std::size_t i, j;  // j == n means boundary
    };
    std::vector<Candidate> cands;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) cands.push_back({problem.weight(i, j), i, j});
        if (problem.boundary[i]) cands.push_back({*problem.boundary[i], i, n});
    }
    std::stable_sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) { return a.w < b.w; });
    std::vector<bool> used(n, false);
    std::size_t left = n, left_with_boundary = 0;
    for (std::size_t i = 0; i < n; ++i) left_with_boundary += problem.boundary[i].has_value();
    // A remainder is completable iff it is even or can route one node to the boundary.
    auto take = [&](std::size_t i) {
        used[i] = true;
        --left;
        left_with_boundary -= problem.boundary[i].has_value();
    };
    Pairing out;
    for (bool progress = true; left > 0 && progress;) {
        progress = false;
        for (const auto& c : cands) {
            if (used[c.i] || (c.j < n && used[c.j])) continue;
            const std::size_t after = left - (c.j == n ? 1 : 2);
            const std::size_t bnd_after = left_with_boundary - problem.boundary[c.i].has_value() -
                                          (c.j < n && problem.boundary[c.j].has_value());
            if (after % 2 == 1 && bnd_after == 0) continue;
            take(c.i);
            if (c.j == n) {
                out.to_boundary.push_back(c.i);
            } else {
                take(c.j);
                out.pairs.emplace_back(c.i, c.j);
            }
            progress = true;
        }
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) throw std::logic_error("greedy: node left unmatched");
    finish(out, problem);
    return out;
}

void dump(std::ostream& out, const MatchingProblem& problem) {
    for (std::size_t i = 0; i < problem.n; ++i) out << "NODE " << i << '\n';
    for (std::size_t i = 0; i < problem.n; ++i)
        for (std::size_t j = i + 1; j < problem.n; ++j) out << "W " << i << ' ' << j << ' ' << problem.weight(i, j) << '\n';
    for (std::size_t i = 0; i < problem.n; ++i)
        if (problem.boundary[i]) out << "B " << i << ' ' << *problem.boundary[i] << '\n';
}

}  // namespace itc
