#include "hpath/partitioner.hpp"

#include <algorithm>
#include <stdexcept>

namespace hpath {

namespace {

using Verts = std::vector<Vertex>;

Verts join(std::initializer_list<Verts> parts) {
    Verts out;
    for (const Verts& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

Verts slice(const Verts& v, std::size_t from, std::size_t to) {
    return Verts(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(to));
}

// Builds a move from role-level edits: `a` edits the slot of color_a, `b` the other.
Move role_move(const PartitionState& st, Rule rule, std::string detail, PathEdit a, PathEdit b) {
    Move m;
    m.rule = rule;
    m.detail = std::move(detail);
    if (st.color_a() == Color::Red) {
        m.red = std::move(a);
        m.blue = std::move(b);
    } else {
        m.red = std::move(b);
        m.blue = std::move(a);
    }
    return m;
}

PathEdit keep(Color c) {
    return PathEdit::keep(source_of(c));
}

PathEdit with_appends(PathEdit edit, std::vector<EdgeAppend> appends) {
    edit.appends = std::move(appends);
    return edit;
}

// Free vertices of the back edge of a proper path, ascending.
Verts back_free(const LoosePath& p) {
    const std::size_t k = p.k;
    const std::size_t len = p.size();
    const std::size_t start = p.edge_count() == 1 ? 0 : len - k + 1;
    Verts out = slice(p.vertices, start, len);
    std::sort(out.begin(), out.end());
    return out;
}

// Free vertices of the front edge, ascending.
Verts front_free(const LoosePath& p) {
    const std::size_t k = p.k;
    const std::size_t end = p.edge_count() == 1 ? k : k - 1;
    Verts out = slice(p.vertices, 0, end);
    std::sort(out.begin(), out.end());
    return out;
}

// Named vertices of the proof setting for role A (longer path) and B.
//   e = last edge of A: v1 = its first slot, V = {v2..vk} the rest, vk = A.back
//   f = first edge of A: X = {x1..x_{k-1}}, x_k its last slot
//   g = last edge of B: u1 = its first slot, U = {u2..uk}, uk = B.back
struct ProofContext {
    Verts a;
    Verts b;
    std::size_t k = 0;
    Vertex v1 = 0;
    Verts V;
    Verts X;
    Verts U;
    Verts w_prime;  // W', the k-1 lowest uncovered vertices

    Vertex vk() const { return V.back(); }
    Vertex v(std::size_t i) const { return V[i - 2]; }  // 2 <= i <= k
    Vertex x(std::size_t i) const { return X[i - 1]; }  // 1 <= i <= k-1
    Vertex uk() const { return U.back(); }
    Vertex u2() const { return U.front(); }
    Vertex w1() const { return w_prime.front(); }
    Verts w_rest() const { return slice(w_prime, 1, w_prime.size()); }  // W' minus w1
};

ProofContext make_context(const PartitionState& st) {
    ProofContext c;
    c.k = st.k();
    c.a = st.path_a().vertices;
    c.b = st.path_b().vertices;
    const std::size_t k = c.k;
    const std::size_t la = c.a.size();
    c.v1 = c.a[la - k];
    c.V = slice(c.a, la - k + 1, la);
    c.X = slice(c.a, 0, k - 1);
    if (c.b.size() >= k) {
        c.U = slice(c.b, c.b.size() - k + 1, c.b.size());
    }
    const Verts& w = st.uncovered();
    c.w_prime = slice(w, 0, std::min(w.size(), k - 1));
    return c;
}

} // namespace

// ---------------------------------------------------------------------------

std::optional<Move> phase_greedy(const PartitionState& st) {
    const Verts& w = st.uncovered();
    if (w.empty()) {
        return std::nullopt;
    }
    const std::size_t k = st.k();
    const Color ca = st.color_a();
    const Color cb = st.color_b();

    // (a) extend a proper path at either end by {free vertex} + (k-1) of W.
    for (const Color slot : {ca, cb}) {
        const LoosePath& p = st.path(slot);
        if (p.degenerate() || w.size() < k - 1) {
            continue;
        }
        for (const bool front : {false, true}) {
            for (const Vertex t : front ? front_free(p) : back_free(p)) {
                Verts edge(k);
                Verts found;
                const bool hit = for_each_subset(w, k - 1, [&](std::span<const Vertex> s) {
                    edge[0] = t;
                    std::copy(s.begin(), s.end(), edge.begin() + 1);
                    if (st.query(edge) == slot) {
                        found.assign(s.begin(), s.end());
                        return true;
                    }
                    return false;
                });
                if (hit) {
                    PathEdit edit = keep(slot);
                    edit.reverse = front;
                    edit.appends.push_back(EdgeAppend{t, found});
                    Move m;
                    m.rule = Rule::GreedyExtend;
                    m.detail = std::string(to_string(slot)) + (front ? "-front" : "-back");
                    (slot == Color::Red ? m.red : m.blue) = std::move(edit);
                    return m;
                }
            }
        }
    }

    // (b) start an empty path with an edge of its color inside W.
    for (const Color slot : {ca, cb}) {
        if (!st.path(slot).empty() || w.size() < k) {
            continue;
        }
        Verts found;
        const bool hit = for_each_subset(w, k, [&](std::span<const Vertex> s) {
            if (st.query(s) == slot) {
                found.assign(s.begin(), s.end());
                return true;
            }
            return false;
        });
        if (hit) {
            Move m;
            m.rule = Rule::GreedyExtend;
            m.detail = std::string(to_string(slot)) + "-start";
            (slot == Color::Red ? m.red : m.blue) =
                with_appends(PathEdit::keep(PathSource::Empty), {EdgeAppend{found[0], slice(found, 1, k)}});
            return m;
        }
    }

    // (c) grow a short degenerate B from W; no color query needed.
    const LoosePath& b = st.path_b();
    if (b.size() < k - 1) {
        const std::size_t take = std::min(w.size(), k - 1 - b.size());
        PathEdit edit = keep(cb);
        edit.absorb = slice(w, 0, take);
        Move m;
        m.rule = Rule::DegenerateAbsorb;
        (cb == Color::Red ? m.red : m.blue) = std::move(edit);
        return m;
    }
    return std::nullopt;
}

bool claim_shape(const PartitionState& st) noexcept {
    const LoosePath& a = st.path_a();
    const LoosePath& b = st.path_b();
    return !st.uncovered().empty() && !a.degenerate() && a.has_canonical_length() && b.size() == st.k() - 1;
}

bool proper_shape(const PartitionState& st) noexcept {
    const LoosePath& a = st.path_a();
    const LoosePath& b = st.path_b();
    return !st.uncovered().empty() && !a.degenerate() && !b.degenerate() && a.has_canonical_length() &&
           b.has_canonical_length();
}

// ---------------------------------------------------------------------------

Move phase_degenerate_claim(const PartitionState& st) {
    if (!claim_shape(st)) {
        throw std::logic_error("phase_degenerate_claim: state does not have a proper A and a (k-1)-vertex B");
    }
    const std::size_t k = st.k();
    const Color ca = st.color_a();
    const Color cb = st.color_b();
    const Verts& w = st.uncovered();
    if (w.size() % (k - 1) != 1 % (k - 1)) {
        throw std::logic_error("phase_degenerate_claim: |W| is not 1 mod (k-1)");
    }
    const ProofContext c = make_context(st);
    const Verts& bv = c.b;
    const Vertex vk = c.vk();
    const std::size_t edges_a = st.path_a().edge_count();
    const PathSource src_a = source_of(ca);

    // A - e: one-edge A keeps {v1..v_{k-1}} as a degenerate set.
    const auto a_minus_e = [&]() {
        if (edges_a == 1) {
            return PathEdit::fresh_set(slice(c.a, 0, k - 1));
        }
        PathEdit edit = PathEdit::keep(src_a);
        edit.trim_back = 1;
        return edit;
    };

    if (w.size() >= k) {
        const Verts q1 = join({{vk}, bv});
        if (st.query(q1) == ca) {
            return role_move(st, Rule::ClaimExtend, "q1", with_appends(keep(ca), {EdgeAppend{vk, bv}}),
                             PathEdit::fresh_set(slice(w, 0, k - 1)));
        }
        const Verts q2 = join({{vk}, c.w_prime});
        if (st.query(q2) == ca) {
            return role_move(st, Rule::GreedyExtend, "q2", with_appends(keep(ca), {EdgeAppend{vk, c.w_prime}}),
                             keep(cb));
        }
        // q1 and q2 both carry B's color and meet in vk.
        PathEdit b_edit = with_appends(PathEdit::keep(PathSource::Empty),
                                       {EdgeAppend{bv[0], join({slice(bv, 1, bv.size()), {vk}})},
                                        EdgeAppend{vk, c.w_prime}});
        return role_move(st, Rule::ClaimTwoEdge, "", a_minus_e(), std::move(b_edit));
    }

    const Vertex wv = w.front();
    if (edges_a == 1) {
        // A is a single edge {v1..vk}; n' = 2k.
        for (const Vertex vi : c.a) {
            if (st.query(join({{vi}, bv})) == ca) {
                return role_move(st, Rule::ClaimExtend, "case1", with_appends(keep(ca), {EdgeAppend{vi, bv}}),
                                 PathEdit::fresh_set({wv}));
            }
        }
        const Vertex v1 = c.a[0];
        const Vertex v2 = c.a[1];
        const Verts tail = join({slice(c.a, 2, k), {wv}});  // h = {v2} + tail
        if (st.query(join({{v2}, tail})) == cb) {
            PathEdit b_edit = with_appends(PathEdit::keep(PathSource::Empty),
                                           {EdgeAppend{bv[0], join({slice(bv, 1, bv.size()), {v2}})},
                                            EdgeAppend{v2, tail}});
            return role_move(st, Rule::Case1Finish, "h-" + std::string(to_string(cb)), PathEdit::fresh_set({v1}),
                             std::move(b_edit));
        }
        return role_move(st, Rule::Case1Finish, "h-" + std::string(to_string(ca)),
                         with_appends(PathEdit::keep(PathSource::Empty), {EdgeAppend{v2, tail}}),
                         with_appends(PathEdit::keep(PathSource::Empty), {EdgeAppend{v1, bv}}));
    }

    // Case 2: A has at least two edges, W = {w}.
    const Verts f1 = join({bv, {wv}});
    if (st.query(f1) == cb) {
        return role_move(st, Rule::Case2Query, "f1", keep(ca), with_appends(keep(cb), {EdgeAppend{bv[0], {wv}}}));
    }
    const Verts f2 = join({{vk}, bv});
    if (st.query(f2) == ca) {
        return role_move(st, Rule::Case2Query, "f2", with_appends(keep(ca), {EdgeAppend{vk, bv}}),
                         PathEdit::fresh_set({wv}));
    }
    const Vertex x1 = c.x(1);
    const Vertex v2 = c.v(2);
    const Verts v3_to_vk = slice(c.V, 1, c.V.size());
    const Verts x2_to_xk1 = slice(c.X, 1, c.X.size());
    const Verts f3_rest = join({v3_to_vk, {wv}});
    if (st.query(join({{x1}, f3_rest})) == ca) {
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_back = 1;
        a_edit.reverse = true;
        a_edit.appends = {EdgeAppend{x1, f3_rest}, EdgeAppend{wv, bv}};
        return role_move(st, Rule::Case2Query, "f3", std::move(a_edit), PathEdit::fresh_set({v2}));
    }
    const Verts f4_rest = join({x2_to_xk1, {wv}});
    if (st.query(join({{v2}, f4_rest})) == ca) {
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_front = 1;
        a_edit.appends = {EdgeAppend{v2, f4_rest}, EdgeAppend{wv, bv}};
        return role_move(st, Rule::Case2Query, "f4", std::move(a_edit), PathEdit::fresh_set({x1}));
    }
    // f2, f3, f4 all carry B's color and chain through vk and w.
    PathEdit a_edit = PathEdit::keep(src_a);
    a_edit.trim_front = 1;
    a_edit.trim_back = 1;
    PathEdit b_edit = with_appends(PathEdit::keep(PathSource::Empty),
                                   {EdgeAppend{bv[0], join({slice(bv, 1, bv.size()), {vk}})},
                                    EdgeAppend{vk, join({{x1}, slice(c.V, 1, c.V.size() - 1), {wv}})},
                                    EdgeAppend{wv, join({{v2}, x2_to_xk1})}});
    return role_move(st, Rule::Case2Query, "f2+f3+f4", std::move(a_edit), std::move(b_edit));
}

// ---------------------------------------------------------------------------

Move phase_proper_main(const PartitionState& st) {
    if (!proper_shape(st)) {
        throw std::logic_error("phase_proper_main: state does not have two proper paths");
    }
    const std::size_t k = st.k();
    if (st.uncovered().size() % (k - 1) != 0) {
        throw std::logic_error("phase_proper_main: |W| is not 0 mod (k-1)");
    }
    const Color ca = st.color_a();
    const Color cb = st.color_b();
    const PathSource src_a = source_of(ca);
    const PathSource src_b = source_of(cb);
    const ProofContext c = make_context(st);
    const Vertex vk = c.vk();
    const Vertex uk = c.uk();
    const Verts& wp = c.w_prime;

    PathEdit b_minus_g = PathEdit::keep(src_b);
    b_minus_g.trim_back = 1;

    if (st.path_a().edge_count() == 1) {
        if (st.query(join({{vk}, c.U})) == ca) {
            return role_move(st, Rule::SingleEdgeRebalance, "", with_appends(keep(ca), {EdgeAppend{vk, c.U}}),
                             b_minus_g);
        }
        if (st.query(join({{vk}, wp})) == ca) {
            return role_move(st, Rule::GreedyExtend, "single-edge", with_appends(keep(ca), {EdgeAppend{vk, wp}}),
                             keep(cb));
        }
        PathEdit b_edit = with_appends(PathEdit::keep(PathSource::Empty),
                                       {EdgeAppend{c.U[0], join({slice(c.U, 1, c.U.size()), {vk}})},
                                        EdgeAppend{vk, wp}});
        return role_move(st, Rule::SingleEdgeRebalance, "pair", PathEdit::fresh_set(slice(c.a, 0, k - 1)),
                         std::move(b_edit));
    }

    // (i)
    if (st.query(join({{vk}, wp})) == ca) {
        return role_move(st, Rule::Deduction, "i", with_appends(keep(ca), {EdgeAppend{vk, wp}}), keep(cb));
    }
    if (st.query(join({{uk}, wp})) == cb) {
        return role_move(st, Rule::Deduction, "i", keep(ca), with_appends(keep(cb), {EdgeAppend{uk, wp}}));
    }
    // From here {uk} + W' carries A's color.

    const Vertex w1 = c.w1();
    const Verts w_rest = c.w_rest();  // W'_{k-2}, excludes w1

    // (ii) {vk, uk} + W'_{k-2}, back and front.
    const Verts uk_wrest = join({{uk}, w_rest});
    if (st.query(join({{vk}, uk_wrest})) == ca) {
        return role_move(st, Rule::Deduction, "ii", with_appends(keep(ca), {EdgeAppend{vk, uk_wrest}}), b_minus_g);
    }
    const Vertex x1 = c.x(1);
    if (st.query(join({{x1}, uk_wrest})) == ca) {
        PathEdit a_edit = keep(ca);
        a_edit.reverse = true;
        a_edit.appends = {EdgeAppend{x1, uk_wrest}};
        return role_move(st, Rule::Deduction, "ii", std::move(a_edit), b_minus_g);
    }
    // {vk, uk} + W'_{k-2} carries B's color.

    // (iii) {w1} + V
    const Verts v_except_vk = slice(c.V, 0, c.V.size() - 1);
    const Verts w1_v_rest = join({{w1}, v_except_vk});  // {w1} + V minus the attach vertex vk
    if (st.query(join({{w1}, c.V})) == cb) {
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_back = 1;
        return role_move(st, Rule::Deduction, "iii", std::move(a_edit),
                         with_appends(keep(cb), {EdgeAppend{uk, join({{vk}, w_rest})}, EdgeAppend{vk, w1_v_rest}}));
    }
    // {w1} + V carries A's color.

    const Vertex x2 = c.x(2);
    // (iv) {x2, vk} + W'_{k-2}
    if (st.query(join({{x2, vk}, w_rest})) == ca) {
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_back = 1;
        a_edit.reverse = true;
        a_edit.appends = {EdgeAppend{x2, join({{vk}, w_rest})}, EdgeAppend{vk, w1_v_rest}};
        return role_move(st, Rule::Deduction, "iv", std::move(a_edit), keep(cb));
    }

    // (v) {vk, w1} + X_{k-2} with X_{k-2} = {x1..x_{k-2}}
    const Verts x_head = slice(c.X, 0, k - 2);
    if (st.query(join({{vk, w1}, x_head})) == ca) {
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_front = 1;
        a_edit.appends = {EdgeAppend{vk, join({{w1}, x_head})}, EdgeAppend{w1, uk_wrest}};
        return role_move(st, Rule::Deduction, "v", std::move(a_edit), b_minus_g);
    }
    // symmetric: {x1, w1} + V_{k-2} with V_{k-2} = {v3..vk}
    const Verts v_tail = slice(c.V, 1, c.V.size());
    if (st.query(join({{x1, w1}, v_tail})) == ca) {
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_back = 1;
        a_edit.reverse = true;
        a_edit.appends = {EdgeAppend{x1, join({{w1}, v_tail})}, EdgeAppend{w1, uk_wrest}};
        return role_move(st, Rule::Deduction, "v", std::move(a_edit), b_minus_g);
    }

    // (vi) h1 = {u2, v2, w1} + X_{k-3} with X_{k-3} = {x3..x_{k-1}}
    const Vertex u2 = c.u2();
    const Vertex v2 = c.v(2);
    const Verts x_tail = slice(c.X, 2, c.X.size());
    const Verts h1 = join({{u2, v2, w1}, x_tail});
    if (st.query(h1) == ca) {
        // A - f + h1 at v2 + ({uk} + W') at w1, B - g.
        PathEdit a_edit = PathEdit::keep(src_a);
        a_edit.trim_front = 1;
        a_edit.appends = {EdgeAppend{v2, join({{u2, w1}, x_tail})}, EdgeAppend{w1, uk_wrest}};
        return role_move(st, Rule::Deduction, "vi", std::move(a_edit), b_minus_g);
    }

    // All forced colors hold: B + h1 at u2 + {w1, x1} + V_{k-2} at w1 + {vk, x2} + W'_{k-2} at vk.
    PathEdit a_edit = PathEdit::keep(src_a);
    a_edit.trim_front = 1;
    a_edit.trim_back = 1;
    PathEdit b_edit = with_appends(keep(cb), {EdgeAppend{u2, join({{v2, w1}, x_tail})},
                                              EdgeAppend{w1, join({{x1}, v_tail})},
                                              EdgeAppend{vk, join({{x2}, w_rest})}});
    return role_move(st, Rule::FinalComposite, "", std::move(a_edit), std::move(b_edit));
}

} // namespace hpath

// ---------------------------------------------------------------------------

namespace hpath {

namespace {

struct TrimmedPath {
    Verts seq;
    Verts removed;
};

TrimmedPath trimmed(const LoosePath& p, std::size_t front, std::size_t back, bool reverse) {
    const std::size_t step = p.k - 1;
    TrimmedPath t;
    t.seq = p.vertices;
    const std::size_t f = std::min(front * step, t.seq.size());
    t.removed.assign(t.seq.begin(), t.seq.begin() + static_cast<std::ptrdiff_t>(f));
    t.seq.erase(t.seq.begin(), t.seq.begin() + static_cast<std::ptrdiff_t>(f));
    const std::size_t b = std::min(back * step, t.seq.size());
    t.removed.insert(t.removed.end(), t.seq.end() - static_cast<std::ptrdiff_t>(b), t.seq.end());
    t.seq.resize(t.seq.size() - b);
    if (reverse) {
        std::reverse(t.seq.begin(), t.seq.end());
    }
    return t;
}

// Candidate attach vertices at the back of a (trimmed) sequence.
Verts attach_points(const Verts& seq, std::size_t k) {
    if (seq.size() == 1) {
        return seq;
    }
    if (seq.size() < k || (seq.size() - 1) % (k - 1) != 0) {
        return {};
    }
    const std::size_t start = seq.size() == k ? 0 : seq.size() - k + 1;
    Verts out = slice(seq, start, seq.size());
    std::sort(out.begin(), out.end());
    return out;
}

class FallbackSearch {
public:
    FallbackSearch(const PartitionState& st, std::size_t budget) : st_(st), budget_(budget), k_(st.k()) {}

    std::optional<Move> run() {
        const Color ca = st_.color_a();
        const Color cb = st_.color_b();
        const LoosePath& a = st_.path(ca);
        const LoosePath& b = st_.path(cb);
        const std::size_t ea = a.edge_count();
        const std::size_t eb = b.edge_count();
        for (std::size_t af = 0; af <= std::min<std::size_t>(2, ea); ++af) {
            for (std::size_t ab = 0; ab <= std::min<std::size_t>(2, ea - af); ++ab) {
                for (std::size_t bf = 0; bf <= std::min<std::size_t>(2, eb); ++bf) {
                    for (std::size_t bb = 0; bb <= std::min<std::size_t>(2, eb - bf); ++bb) {
                        for (const bool ra : {false, true}) {
                            for (const bool rb : {false, true}) {
                                if (auto m = attempt(ca, {af, ab, ra}, cb, {bf, bb, rb})) {
                                    return m;
                                }
                                if (exhausted_) {
                                    return std::nullopt;
                                }
                            }
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }

private:
    struct Trim {
        std::size_t front;
        std::size_t back;
        bool reverse;
    };

    std::optional<Move> attempt(Color ca, Trim ta, Color cb, Trim tb) {
        const TrimmedPath pa = trimmed(st_.path(ca), ta.front, ta.back, ta.reverse);
        const TrimmedPath pb = trimmed(st_.path(cb), tb.front, tb.back, tb.reverse);
        Verts pool = st_.uncovered();
        pool.insert(pool.end(), pa.removed.begin(), pa.removed.end());
        pool.insert(pool.end(), pb.removed.begin(), pb.removed.end());
        std::sort(pool.begin(), pool.end());

        const auto edit_for = [](Color c, Trim t) {
            PathEdit e = PathEdit::keep(source_of(c));
            e.trim_front = t.front;
            e.trim_back = t.back;
            e.reverse = t.reverse;
            return e;
        };
        PathEdit ea = edit_for(ca, ta);
        PathEdit eb = edit_for(cb, tb);
        const std::string detail = "trim " + std::to_string(ta.front) + "/" + std::to_string(ta.back) + " " +
                                   std::to_string(tb.front) + "/" + std::to_string(tb.back);

        Verts seq_a = pa.seq;
        for (int step = 0; step <= 3; ++step) {
            if (step > 0 && !grow(seq_a, ca, pool, ea)) {
                break;
            }
            Verts seq_b = pb.seq;
            Verts pool_b = pool;
            PathEdit eb_try = eb;
            for (int bstep = 0; bstep <= 3; ++bstep) {
                if (bstep > 0 && !grow(seq_b, cb, pool_b, eb_try)) {
                    break;
                }
                Move m;
                m.rule = Rule::FallbackExchange;
                m.detail = detail;
                (ca == Color::Red ? m.red : m.blue) = ea;
                (cb == Color::Red ? m.red : m.blue) = eb_try;
                if (simulate_move(st_, m).ok) {
                    return m;
                }
                if (exhausted_) {
                    return std::nullopt;
                }
            }
        }
        return std::nullopt;
    }

    // Appends one edge of color c at the back of seq, drawn from pool.
    bool grow(Verts& seq, Color c, Verts& pool, PathEdit& edit) {
        if (pool.size() < k_ - 1) {
            return false;
        }
        for (const Vertex t : attach_points(seq, k_)) {
            Verts edge(k_);
            Verts found;
            const bool hit = for_each_subset(pool, k_ - 1, [&](std::span<const Vertex> s) {
                if (++queries_ > budget_) {
                    exhausted_ = true;
                    return true;
                }
                edge[0] = t;
                std::copy(s.begin(), s.end(), edge.begin() + 1);
                if (st_.query(edge) == c) {
                    found.assign(s.begin(), s.end());
                    return true;
                }
                return false;
            });
            if (exhausted_) {
                return false;
            }
            if (hit) {
                if (seq.size() > 1) {
                    std::iter_swap(std::find(seq.begin(), seq.end(), t), seq.end() - 1);
                }
                seq.insert(seq.end(), found.begin(), found.end());
                std::erase_if(pool, [&](Vertex v) { return std::find(found.begin(), found.end(), v) != found.end(); });
                edit.appends.push_back(EdgeAppend{t, found});
                return true;
            }
        }
        return false;
    }

    const PartitionState& st_;
    std::size_t budget_;
    std::size_t k_;
    std::size_t queries_ = 0;
    bool exhausted_ = false;
};

} // namespace

std::optional<Move> phase_fallback(const PartitionState& st, std::size_t budget) {
    if (st.uncovered().empty() || budget == 0) {
        return std::nullopt;
    }
    return FallbackSearch(st, budget).run();
}

} // namespace hpath
