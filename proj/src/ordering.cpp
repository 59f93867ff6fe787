#include "latrep/ordering.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace latrep {

namespace {

struct build_context {
    const set_family& F;
    leader_relation lead;
    ternary_table tern;
    std::vector<std::string>* notes = nullptr;
    bool ambiguous = false;
    std::string reason;

    explicit build_context(const set_family& fam)
        : F(fam), lead(leader_preorder(fam)), tern(make_ternary_table(fam)) {}

    bool T(int a, int b, int c) const { return tern.holds(a, b, c); }
    bool leads(int x, int y) const { return lead.leads_to(x, y); }
    bool indep(int x, int y) const { return lead.independent(x, y); }

    void flag(const std::string& what) {
        if (notes) notes->push_back(what);
        if (!ambiguous) {
            ambiguous = true;
            reason = what;
        }
    }
};

// Orders a list by a pairwise precedence rule: repeatedly emit the
// smallest-index element nothing else strictly precedes. Total precedences
// give their unique order; silent or contradictory pairs degrade to index
// order (the final consistency check guards the result either way).
void sort_by_precedence(std::vector<int>& v,
                        const std::function<bool(int, int)>& rule) {
    std::sort(v.begin(), v.end());
    std::vector<int> out, rem = v;
    while (!rem.empty()) {
        int pick = rem.front();
        for (int m : rem) {
            bool minimal = true;
            for (int r : rem)
                if (r != m && rule(r, m) && !rule(m, r)) {
                    minimal = false;
                    break;
                }
            if (minimal) {
                pick = m;
                break;
            }
        }
        out.push_back(pick);
        rem.erase(std::find(rem.begin(), rem.end(), pick));
    }
    v = std::move(out);
}

std::vector<int> greedy_independent(const build_context& ctx,
                                    const std::vector<int>& P) {
    auto extend = [&](std::vector<int> Z) {
        for (int x : P) {
            if (std::find(Z.begin(), Z.end(), x) != Z.end()) continue;
            bool ok = true;
            for (int z : Z)
                if (!ctx.indep(x, z)) ok = false;
            if (ok) Z.push_back(x);
        }
        return Z;
    };
    std::vector<int> Z = extend({});
    if (Z.size() == 1) {
        // Greedy from one seed can miss an independent pair entirely;
        // reseed with the first such pair if one exists.
        for (size_t i = 0; i < P.size(); ++i)
            for (size_t j = i + 1; j < P.size(); ++j)
                if (ctx.indep(P[i], P[j])) return extend({P[i], P[j]});
    }
    return Z;
}

}  // namespace

// --- betweenness realization -------------------------------------------

std::variant<linear_order, realization_failure> realize_betweenness(
    const std::vector<int>& points, const ternary_fn& T) {
    int k = static_cast<int>(points.size());

    for (int a : points) {
        if (!T(a, a, a)) return realization_failure{1, {a, a, a}};
        for (int b : points) {
            if (a == b) continue;
            if (T(a, b, a)) return realization_failure{1, {a, b, a}};
            if (!T(a, a, b)) return realization_failure{1, {a, a, b}};
            if (!T(a, b, b)) return realization_failure{1, {a, b, b}};
        }
    }

    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            for (int l = j + 1; l < k; ++l) {
                int a = points[i], b = points[j], c = points[l];
                if (!T(a, b, c) && !T(b, c, a) && !T(c, a, b))
                    return realization_failure{3, {a, b, c}};
            }

    if (k <= 12) {
        for (int a : points)
            for (int b : points)
                for (int c : points)
                    for (int d : points)
                        for (int e : points)
                            if (T(a, b, c) && T(b, d, e) && !T(c, b, d) &&
                                !T(e, b, a))
                                return realization_failure{2, {a, b, c}};
    }

    std::vector<int> seq;
    auto triple_ok = [&](const std::vector<int>& s, int i, int j, int l) {
        int x = s[i], y = s[j], z = s[l];
        return T(x, y, z) && T(z, y, x) && !T(y, x, z) && !T(z, x, y) &&
               !T(x, z, y) && !T(y, z, x);
    };
    for (int p : points) {
        bool placed = false;
        int len = static_cast<int>(seq.size());
        for (int pos = 0; pos <= len && !placed; ++pos) {
            std::vector<int> cand = seq;
            cand.insert(cand.begin() + pos, p);
            bool ok = true;
            int m = static_cast<int>(cand.size());
            for (int i = 0; i < m && ok; ++i)
                for (int j = i + 1; j < m && ok; ++j)
                    for (int l = j + 1; l < m && ok; ++l)
                        if (!triple_ok(cand, i, j, l)) ok = false;
            if (ok) {
                seq = std::move(cand);
                placed = true;
            }
        }
        if (!placed) {
            // Only reachable when postulate 2 was not scanned; report the
            // first triple through p that no arrangement satisfies.
            for (int a : seq)
                for (int b : seq)
                    if (a != b && !T(a, p, b) && !T(p, a, b) && !T(a, b, p))
                        return realization_failure{3, {a, p, b}};
            return realization_failure{2, {p, seq.empty() ? p : seq.front(),
                                           seq.empty() ? p : seq.back()}};
        }
    }

    if (!seq.empty() && seq.front() > seq.back())
        std::reverse(seq.begin(), seq.end());
    return linear_order{std::move(seq)};
}

std::variant<linear_order, realization_failure, not_completely_separated>
order_completely_separated(const set_family& F, const std::vector<int>& points) {
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (!completely_separated_pair(F, points[i], points[j]))
                return not_completely_separated{{points[i], points[j]}};
    ternary_table tt = make_ternary_table(F);
    auto r = realize_betweenness(
        points, [&](int a, int b, int c) { return tt.holds(a, b, c); });
    if (std::holds_alternative<realization_failure>(r))
        return std::get<realization_failure>(r);
    return std::get<linear_order>(r);
}

// --- classification ------------------------------------------------------

namespace {

bool contiguous_positions(const std::vector<int>& positions) {
    for (size_t i = 1; i < positions.size(); ++i)
        if (positions[i] != positions[i - 1] + 1) return false;
    return true;
}

point_classification classify_core(build_context& ctx,
                                   const std::vector<int>& base, int x) {
    point_classification pc;
    pc.point = x;
    int k = static_cast<int>(base.size());
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[base[i]] = i;

    for (int y : base) {
        if (ctx.leads(x, y)) pc.L.push_back(y);
        if (ctx.leads(y, x)) pc.M.push_back(y);
    }

    auto bail = [&](const std::string& why) {
        pc.ambiguous = true;
        pc.note = why;
        ctx.flag(why);
        return pc;
    };

    if (!pc.L.empty() && !pc.M.empty())
        return bail("point both leads and follows the base");
    if (pc.L.empty() && pc.M.empty())
        return bail("point unrelated to a maximal base");

    if (!pc.M.empty()) {
        if (pc.M.size() > 2) return bail("more than two base points lead a point");
        if (pc.M.size() == 2) {
            int p1 = pos[pc.M[0]], p2 = pos[pc.M[1]];
            if (p2 != p1 + 1) return bail("leading pair is not adjacent");
            pc.type = point_type::follower_pair;
            pc.cut = p2;
            pc.exceptional = true;
            return pc;
        }
        int y0 = pc.M[0];
        int p0 = pos[y0];
        auto clings_away_from = [&](int from, int to) {
            // True when no base point on the scanned flank keeps x on it.
            for (int q = from; q < to; ++q)
                if (ctx.T(x, y0, base[q])) return false;
            return true;
        };
        if (k == 1) {
            pc.type = point_type::follower_first;
            pc.cut = 0;
            pc.exceptional = true;
            return pc;
        }
        if (p0 == 0) {
            pc.type = point_type::follower_first;
            bool breaks_right = false;
            for (int q = 1; q < k; ++q)
                if (!ctx.T(x, y0, base[q])) breaks_right = true;
            if (breaks_right) {
                pc.cut = 1;
            } else {
                pc.cut = 0;
                pc.exceptional = true;
            }
            return pc;
        }
        if (p0 == k - 1) {
            pc.type = point_type::follower_last;
            bool breaks_left = false;
            for (int q = 0; q < k - 1; ++q)
                if (!ctx.T(x, y0, base[q])) breaks_left = true;
            if (breaks_left) {
                pc.cut = k - 1;
            } else {
                pc.cut = k;
                pc.exceptional = true;
            }
            return pc;
        }
        pc.type = point_type::follower_interior;
        bool right_free = clings_away_from(p0 + 1, k);  // no (x y0 y) rightward
        bool left_free = clings_away_from(0, p0);
        if (right_free == left_free)
            return bail("interior follower fails the one-sided dichotomy");
        pc.cut = right_free ? p0 + 1 : p0;
        return pc;
    }

    // Leader types.
    std::vector<int> lpos;
    for (int y : pc.L) lpos.push_back(pos[y]);
    if (!contiguous_positions(lpos)) return bail("led set is not convex in the base");
    if (static_cast<int>(pc.L.size()) == k) {
        pc.type = point_type::full_leader;
        pc.cut = 0;
        return pc;
    }
    int lmin = lpos.front(), lmax = lpos.back();
    bool has_left = lmin > 0, has_right = lmax < k - 1;

    auto visible_from = [&](int flank_begin, int flank_end) {
        // Members of L pushed outward by some flank point: not (y x y').
        std::vector<int> out;
        for (int y : pc.L) {
            bool pushed = false;
            for (int q = flank_begin; q < flank_end && !pushed; ++q)
                if (!ctx.T(y, x, base[q])) pushed = true;
            if (pushed) out.push_back(y);
        }
        return out;
    };

    if (has_left && has_right) {
        pc.type = point_type::interior_leader;
        pc.L1 = visible_from(0, lmin);
        pc.L2 = visible_from(lmax + 1, k);
        int n1 = static_cast<int>(pc.L1.size()), n2 = static_cast<int>(pc.L2.size());
        bool initial = true, final = true;
        for (int i = 0; i < n1; ++i)
            if (pc.L1[i] != pc.L[i]) initial = false;
        for (int i = 0; i < n2; ++i)
            if (pc.L2[i] != pc.L[pc.L.size() - n2 + i]) final = false;
        if (!initial || !final)
            return bail("flank-visible parts are not edge segments of the led set");
        if (n1 + n2 != static_cast<int>(pc.L.size()))
            return bail("flank-visible parts do not cover the led set");
        pc.cut = lmin + n1;
        return pc;
    }
    if (!has_left && has_right) {
        pc.type = point_type::left_edge_leader;
        pc.L2 = visible_from(lmax + 1, k);
        int n2 = static_cast<int>(pc.L2.size());
        for (int i = 0; i < n2; ++i)
            if (pc.L2[i] != pc.L[pc.L.size() - n2 + i])
                return bail("right-visible part is not a final segment of the led set");
        pc.cut = static_cast<int>(pc.L.size()) - n2;
        return pc;
    }
    if (has_left && !has_right) {
        pc.type = point_type::right_edge_leader;
        pc.L1 = visible_from(0, lmin);
        int n1 = static_cast<int>(pc.L1.size());
        for (int i = 0; i < n1; ++i)
            if (pc.L1[i] != pc.L[i])
                return bail("left-visible part is not an initial segment of the led set");
        pc.cut = lmin + n1;
        return pc;
    }
    return bail("led set has no flank yet is not the whole base");
}

// Classify and then verify the chosen cut: the point must lie between every
// base point left of the cut and every base point right of it. Full leaders
// are exempt (their cut is assigned later by the anchor rules).
point_classification classify_impl(build_context& ctx,
                                   const std::vector<int>& base, int x) {
    point_classification pc = classify_core(ctx, base, x);
    if (pc.ambiguous || pc.type == point_type::full_leader) return pc;
    int k = static_cast<int>(base.size());
    for (int q = 0; q < pc.cut; ++q)
        for (int r = pc.cut; r < k; ++r)
            if (!ctx.T(base[q], x, base[r])) {
                pc.ambiguous = true;
                pc.note = "classified point not between its section sides";
                ctx.flag(pc.note);
                return pc;
            }
    return pc;
}

}  // namespace

point_classification classify_point(const set_family& F,
                                    const std::vector<int>& base, int x) {
    build_context ctx(F);
    return classify_impl(ctx, base, x);
}

// --- one construction round ---------------------------------------------

namespace {

struct step_result {
    std::vector<int> placed;
    std::vector<std::pair<int, int>> deferred;  // (point, cut into placed)
};

step_result order_group(build_context& ctx, const std::vector<int>& P) {
    step_result R;
    if (P.size() == 1) {
        R.placed = P;
        return R;
    }

    std::vector<int> Z = greedy_independent(ctx, P);
    std::sort(Z.begin(), Z.end());

    if (Z.size() <= 1) {
        // No independent pair: the leader relation orders the group.
        std::vector<int> sorted = P;
        for (size_t i = 0; i < P.size(); ++i)
            for (size_t j = i + 1; j < P.size(); ++j)
                if (!ctx.leads(P[i], P[j]) && !ctx.leads(P[j], P[i]))
                    ctx.flag("leader relation not total on a pairless group");
        sort_by_precedence(sorted,
                           [&](int a, int b) { return ctx.leads(a, b); });
        R.placed = std::move(sorted);
        return R;
    }

    auto realized = realize_betweenness(
        Z, [&](int a, int b, int c) { return ctx.T(a, b, c); });
    if (std::holds_alternative<realization_failure>(realized)) {
        ctx.flag("betweenness of the independent base is unrealizable");
        R.placed = Z;
        return R;
    }
    std::vector<int> Y = std::get<linear_order>(realized).points;
    int k = static_cast<int>(Y.size());
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[Y[i]] = i;

    std::vector<int> W;
    std::vector<std::pair<int, point_classification>> exceptional;
    std::map<int, std::vector<std::pair<int, point_classification>>> ordinary;
    std::vector<point_classification> all_cls;
    for (int x : P) {
        if (pos.count(x)) continue;
        point_classification c = classify_impl(ctx, Y, x);
        all_cls.push_back(c);
        if (c.ambiguous) continue;
        if (c.type == point_type::full_leader)
            W.push_back(x);
        else if (c.exceptional)
            exceptional.emplace_back(x, c);
        else
            ordinary[c.cut].emplace_back(x, c);
    }

    if (!W.empty()) {
        std::vector<int> U1, U2;
        for (auto& [x, c] : ordinary[0])
            if (c.type == point_type::left_edge_leader) U1.push_back(x);
        for (auto& [x, c] : ordinary[k])
            if (c.type == point_type::right_edge_leader) U2.push_back(x);

        bool indep_pair = false, indep_triple = false;
        std::pair<int, int> first_pair{-1, -1};
        for (size_t i = 0; i < W.size(); ++i)
            for (size_t j = i + 1; j < W.size(); ++j)
                if (ctx.indep(W[i], W[j])) {
                    if (!indep_pair) first_pair = {W[i], W[j]};
                    indep_pair = true;
                    for (size_t l = j + 1; l < W.size(); ++l)
                        if (ctx.indep(W[i], W[l]) && ctx.indep(W[j], W[l]))
                            indep_triple = true;
                }
        if (indep_triple) ctx.flag("three mutually independent full leaders");

        int trigger1 = -1, trigger2 = -1;
        for (int w : W) {
            if (trigger1 == -1)
                for (int u : U1)
                    if (!ctx.leads(w, u)) trigger1 = w;
            if (trigger2 == -1)
                for (int u : U2)
                    if (!ctx.leads(w, u)) trigger2 = w;
        }

        auto place = [&](int x, int cut) {
            point_classification c;
            c.point = x;
            c.type = point_type::full_leader;
            c.cut = cut;
            ordinary[cut].emplace_back(x, c);
        };

        if (trigger1 != -1 && trigger2 != -1) {
            ctx.flag("full leaders break toward both extremes at once");
        } else if (trigger1 != -1) {
            place(trigger1, k);
            for (int w : W) {
                if (w == trigger1) continue;
                place(w, ctx.indep(w, trigger1) ? 0 : k);
            }
        } else if (trigger2 != -1) {
            place(trigger2, 0);
            for (int w : W) {
                if (w == trigger2) continue;
                if (ctx.indep(w, trigger2))
                    place(w, k);
                else
                    ctx.flag("dependent full leader in a right-breaking group");
            }
        } else if (indep_pair) {
            auto [w1, w2] = first_pair;
            place(w1, 0);
            place(w2, k);
            for (int w : W) {
                if (w == w1 || w == w2) continue;
                bool near1 = !ctx.indep(w, w1), near2 = !ctx.indep(w, w2);
                if (near1 == near2)
                    ctx.flag("full leader attaches to neither or both anchors");
                else
                    place(w, near1 ? 0 : k);
            }
        } else {
            for (int w : W) place(w, 0);
        }
    }

    // Assemble: per cut, the clinging/led blocks around each base point.
    std::vector<int> chunk;
    std::map<int, int> after_left_cling;  // cut -> chunk index past its left block
    for (int c = 0; c <= k; ++c) {
        auto it = ordinary.find(c);
        std::vector<std::pair<int, point_classification>> group =
            it == ordinary.end() ? std::vector<std::pair<int, point_classification>>{}
                                 : it->second;
        if (c == 0) {
            std::vector<int> g;
            for (auto& [x, cls] : group) g.push_back(x);
            for (size_t i = 0; i < g.size(); ++i)
                for (size_t j = i + 1; j < g.size(); ++j)
                    if (ctx.indep(g[i], g[j]))
                        ctx.flag("left extreme block not leader-comparable");
            sort_by_precedence(g,
                               [&](int a, int b) { return ctx.leads(a, b); });
            chunk.insert(chunk.end(), g.begin(), g.end());
        } else if (c == k) {
            std::vector<int> g;
            for (auto& [x, cls] : group) g.push_back(x);
            for (size_t i = 0; i < g.size(); ++i)
                for (size_t j = i + 1; j < g.size(); ++j)
                    if (ctx.indep(g[i], g[j]))
                        ctx.flag("right extreme block not leader-comparable");
            sort_by_precedence(g,
                               [&](int a, int b) { return ctx.leads(b, a); });
            chunk.insert(chunk.end(), g.begin(), g.end());
        } else {
            mask_t A = 0, B = 0;
            for (int i = 0; i < c; ++i) A |= bit(Y[i]);
            for (int i = c; i < k; ++i) B |= bit(Y[i]);
            std::vector<int> left_cling, led_left, led_both, led_right, right_cling;
            for (auto& [x, cls] : group) {
                mask_t Lm = indices_to_mask(cls.L), Mm = indices_to_mask(cls.M);
                if (Mm) {
                    bool ma = (Mm & A), mb = (Mm & B);
                    if (ma && !mb)
                        left_cling.push_back(x);
                    else if (mb && !ma)
                        right_cling.push_back(x);
                    else
                        ctx.flag("ordinary follower with leaders on both sides");
                } else {
                    bool la = (Lm & A), lb = (Lm & B);
                    if (la && lb)
                        led_both.push_back(x);
                    else if (la)
                        led_left.push_back(x);
                    else if (lb)
                        led_right.push_back(x);
                    else
                        ctx.flag("ordinary point in no section block");
                }
            }
            if (led_both.size() > 1)
                ctx.flag("two points straddle the same section");
            sort_by_precedence(left_cling, [&](int a, int b) {
                for (int i = c; i < k; ++i)
                    if (!ctx.T(a, b, Y[i])) return false;
                return true;
            });
            sort_by_precedence(led_left,
                               [&](int a, int b) { return ctx.leads(b, a); });
            std::sort(led_both.begin(), led_both.end());
            sort_by_precedence(led_right,
                               [&](int a, int b) { return ctx.leads(a, b); });
            sort_by_precedence(right_cling, [&](int a, int b) {
                for (int i = 0; i < c; ++i)
                    if (!ctx.T(b, a, Y[i])) return false;
                return true;
            });
            after_left_cling[c] =
                static_cast<int>(chunk.size() + left_cling.size());
            chunk.insert(chunk.end(), left_cling.begin(), left_cling.end());
            chunk.insert(chunk.end(), led_left.begin(), led_left.end());
            chunk.insert(chunk.end(), led_both.begin(), led_both.end());
            chunk.insert(chunk.end(), led_right.begin(), led_right.end());
            chunk.insert(chunk.end(), right_cling.begin(), right_cling.end());
        }
        if (c < k) chunk.push_back(Y[c]);
    }

    for (auto& [x, cls] : exceptional) {
        int local = 0;
        if (cls.type == point_type::follower_first)
            local = 0;
        else if (cls.type == point_type::follower_last)
            local = static_cast<int>(chunk.size());
        else  // follower_pair: straight after the left-clinging block
            local = after_left_cling.count(cls.cut)
                        ? after_left_cling[cls.cut]
                        : static_cast<int>(chunk.size());
        R.deferred.emplace_back(x, local);
    }
    R.placed = std::move(chunk);
    return R;
}

std::variant<consistent_triple, ambiguous_case> extend_step_impl(
    build_context& ctx, const consistent_triple& t) {
    std::map<int, std::vector<int>> groups;
    for (auto& [p, cut] : t.pending) groups[cut].push_back(p);
    for (auto& [cut, g] : groups) std::sort(g.begin(), g.end());

    consistent_triple out;
    int k = static_cast<int>(t.order.size());
    for (auto& [cut, g] : groups)
        if (cut < 0 || cut > k) {
            ctx.flag("pending point outside the order's cut range");
            return ambiguous_case{ctx.reason};
        }
    for (int c = 0; c <= k; ++c) {
        auto it = groups.find(c);
        if (it != groups.end()) {
            step_result res = order_group(ctx, it->second);
            if (ctx.ambiguous) return ambiguous_case{ctx.reason};
            int start = static_cast<int>(out.order.size());
            out.order.insert(out.order.end(), res.placed.begin(), res.placed.end());
            for (auto& [p, local] : res.deferred)
                out.pending.emplace_back(p, start + local);
        }
        if (c < k) out.order.push_back(t.order[c]);
    }
    return out;
}

}  // namespace

consistent_triple initial_triple(const set_family& F) {
    consistent_triple t;
    for (int x = 0; x < F.n; ++x) t.pending.emplace_back(x, 0);
    return t;
}

consistent_triple triple_from_base(const set_family& F,
                                   const std::vector<int>& base) {
    build_context ctx(F);
    consistent_triple t;
    t.order = base;
    mask_t in_base = indices_to_mask(base);
    for (int x = 0; x < F.n; ++x) {
        if (has_bit(in_base, x)) continue;
        point_classification c = classify_impl(ctx, base, x);
        t.pending.emplace_back(x, c.cut);
    }
    return t;
}

std::variant<consistent_triple, ambiguous_case> extend_step(
    const set_family& F, const consistent_triple& t) {
    build_context ctx(F);
    return extend_step_impl(ctx, t);
}

consistency_verdict is_consistent(const set_family& F, const linear_order& o) {
    consistency_verdict v;
    int n = static_cast<int>(o.points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int l = j + 1; l < n; ++l)
                for (int m = 0; m < F.member_count(); ++m) {
                    mask_t mem = F.members[m];
                    if (has_bit(mem, o.points[i]) && has_bit(mem, o.points[l]) &&
                        !has_bit(mem, o.points[j])) {
                        v.ok = false;
                        v.witness = {o.points[i], o.points[j], o.points[l]};
                        v.member = m;
                        return v;
                    }
                }
    return v;
}

// --- exhaustive search ----------------------------------------------------

namespace {

bool placed_convex(const set_family& F, const std::vector<int>& seq) {
    for (mask_t mem : F.members) {
        int first = -1, last = -1;
        for (int i = 0; i < static_cast<int>(seq.size()); ++i)
            if (has_bit(mem, seq[i])) {
                if (first == -1) first = i;
                last = i;
            }
        if (first == -1) continue;
        for (int i = first; i <= last; ++i)
            if (!has_bit(mem, seq[i])) return false;
    }
    return true;
}

bool insert_all(const set_family& F, std::vector<int>& seq,
                const std::vector<int>& rest, size_t at) {
    if (at == rest.size()) return true;
    int p = rest[at];
    for (size_t pos = 0; pos <= seq.size(); ++pos) {
        seq.insert(seq.begin() + pos, p);
        if (placed_convex(F, seq) && insert_all(F, seq, rest, at + 1))
            return true;
        seq.erase(seq.begin() + pos);
    }
    return false;
}

}  // namespace

std::optional<linear_order> search_order_extending(
    const set_family& F, const std::vector<int>& base) {
    std::vector<int> rest;
    mask_t in_base = indices_to_mask(base);
    for (int x = 0; x < F.n; ++x)
        if (!has_bit(in_base, x)) rest.push_back(x);
    std::vector<int> seq = base;
    if (!placed_convex(F, seq)) return std::nullopt;
    if (insert_all(F, seq, rest, 0)) return linear_order{seq};
    return std::nullopt;
}

std::optional<linear_order> search_consistent_order(const set_family& F) {
    return search_order_extending(F, {});
}

order_result build_consistent_order(const set_family& F) {
    order_result out;

    loc_family_verdict loc = is_loc_setfamily(F);
    if (!loc.ok) {
        out.error_code = "NotLoc";
        out.error_detail = loc.error_code.empty()
                               ? "local condition " + std::to_string(loc.condition) +
                                     " fails"
                               : "family is not a lattice of sets";
        return out;
    }
    separation_profile sep = separation(F);
    if (!sep.separates) {
        out.error_code = "NotSeparating";
        out.error_detail = "points " + F.ground[sep.separates_witness->first] +
                           " and " + F.ground[sep.separates_witness->second] +
                           " lie in the same members";
        return out;
    }

    build_context ctx(F);
    ctx.notes = &out.construction_notes;
    consistent_triple t = initial_triple(F);
    std::vector<int> last_good;
    bool failed = false;
    while (!t.pending.empty()) {
        if (out.rounds > F.n + 1) {
            ctx.flag("refinement failed to terminate");
            failed = true;
            break;
        }
        auto r = extend_step_impl(ctx, t);
        ++out.rounds;
        if (std::holds_alternative<ambiguous_case>(r)) {
            out.fallback_reason = std::get<ambiguous_case>(r).reason;
            last_good = t.order;
            failed = true;
            break;
        }
        t = std::get<consistent_triple>(r);
    }

    if (!failed) {
        linear_order candidate{t.order};
        if (static_cast<int>(candidate.points.size()) == F.n &&
            is_consistent(F, candidate).ok) {
            out.order = candidate;
            return out;
        }
        out.fallback_reason = "constructed order is not member-convex";
        failed = true;
        last_good.clear();
    }

    out.fallback_used = true;
    auto ext = last_good.empty() ? std::nullopt
                                 : search_order_extending(F, last_good);
    if (!ext) ext = search_consistent_order(F);
    if (ext && is_consistent(F, *ext).ok) out.order = ext;
    return out;
}

}  // namespace latrep
