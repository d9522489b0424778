#include "minabc/transform.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "minabc/abc.hpp"

namespace minabc {

namespace {

struct Move {
    int vertex, old_parent, new_parent;
};

// ---- structural probes ----------------------------------------------

// x is a length-2 arm start at v: v-x-leaf.
bool is_arm2(const Tree& t, int v, int x) {
    if (t.degree(x) != 2) return false;
    for (int y : t.neighbors(x))
        if (y != v && t.degree(y) == 1) return true;
    return false;
}

std::vector<int> arm2_starts(const Tree& t, int v) {
    std::vector<int> out;
    for (int x : t.neighbors(v))
        if (is_arm2(t, v, x)) out.push_back(x);
    return out;
}

// r is a B1 root hanging on v: v-r-a-leaf with deg(r)=deg(a)=2.
bool is_b1_root(const Tree& t, int v, int r) {
    if (t.degree(r) != 2) return false;
    for (int a : t.neighbors(r))
        if (a != v && is_arm2(t, r, a)) return true;
    return false;
}

std::vector<int> b1_children(const Tree& t, int v, int skip = -1) {
    std::vector<int> out;
    for (int r : t.neighbors(v))
        if (r != skip && is_b1_root(t, v, r)) out.push_back(r);
    return out;
}

// r is a B_k root child of v (degree k+1, k length-2 arms).
bool is_bk_root(const Tree& t, int v, int r, int k) {
    if (t.degree(r) != k + 1) return false;
    return static_cast<int>(arm2_starts(t, r).size()) == k;
}

std::vector<int> bk_children(const Tree& t, int v, int k, int skip = -1) {
    std::vector<int> out;
    for (int r : t.neighbors(v))
        if (r != skip && is_bk_root(t, v, r, k)) out.push_back(r);
    return out;
}

int leaf_of_arm(const Tree& t, int v, int x) {
    for (int y : t.neighbors(x))
        if (y != v && t.degree(y) == 1) return y;
    throw PreconditionViolated("not an arm");
}

void require(bool cond, const std::string& what) {
    if (!cond) throw PreconditionViolated(what);
}

int anchor(const TransformationSpec& s, const std::string& key) {
    auto it = s.anchors.find(key);
    require(it != s.anchors.end(), s.name + " needs anchor " + key);
    return it->second;
}

int anchor_or(const TransformationSpec& s, const std::string& key, int def) {
    auto it = s.anchors.find(key);
    return it == s.anchors.end() ? def : it->second;
}

// ---- move application and the closed-form delta ----------------------

Tree apply_moves(const Tree& t, const std::vector<Move>& moves) {
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : t.edges()) edges.insert({u, v});
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    for (const auto& m : moves) {
        auto old_e = norm(m.vertex, m.old_parent);
        require(edges.erase(old_e) == 1, "move source edge missing");
        auto new_e = norm(m.vertex, m.new_parent);
        require(edges.insert(new_e).second, "move target edge already present");
    }
    std::vector<Edge> ev(edges.begin(), edges.end());
    return Tree::validate(t.order(), ev);
}

double closed_form_delta(const Tree& t, const std::vector<Move>& moves) {
    std::map<int, int> dd;  // degree deltas
    for (const auto& m : moves) {
        dd[m.old_parent] -= 1;
        dd[m.new_parent] += 1;
    }
    auto d_old = [&](int v) { return static_cast<double>(t.degree(v)); };
    auto d_new = [&](int v) {
        auto it = dd.find(v);
        return d_old(v) + (it == dd.end() ? 0 : it->second);
    };
    std::set<std::pair<int, int>> moved;
    auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
    std::vector<DegreePairChange> changes;
    for (const auto& m : moves) {
        moved.insert(norm(m.vertex, m.old_parent));
        changes.push_back({d_old(m.old_parent), d_old(m.vertex),
                           d_new(m.new_parent), d_new(m.vertex)});
    }
    // unmoved edges incident to a degree change
    for (auto [a, b] : t.edges()) {
        if (moved.count({a, b})) continue;
        if (!dd.count(a) && !dd.count(b)) continue;
        changes.push_back({d_old(a), d_old(b), d_new(a), d_new(b)});
    }
    return degree_change_delta(changes);
}

// ---- individual transformations --------------------------------------

using MoveFn = std::vector<Move> (*)(const Tree&, const TransformationSpec&);

// T-B1 family (also T-B1-relaxed, T-proper-Tk): move one B1-branch from
// u to its smallest child v of degree >= 3. Root case: w = -1.
std::vector<Move> moves_move_b1(const Tree& t, const TransformationSpec& s) {
    int u = anchor(s, "u"), v = anchor(s, "v");
    int w = anchor_or(s, "w", -1);
    require(w == -1 || std::find(t.neighbors(u).begin(), t.neighbors(u).end(), w) !=
                           t.neighbors(u).end(),
            "w must neighbor u");
    require(std::find(t.neighbors(u).begin(), t.neighbors(u).end(), v) != t.neighbors(u).end(),
            "v must be a child of u");
    require(t.degree(v) >= 3, "v needs degree >= 3");
    auto b1 = b1_children(t, u, v);
    require(!b1.empty(), "u needs a B1-branch child");
    return {{b1.front(), u, v}};
}

// T1-B1: two B1 branches of u move under a third B1 root r2; one arm of
// the B3-child v moves under a fourth B1 root r1.
std::vector<Move> moves_t1_b1(const Tree& t, const TransformationSpec& s) {
    int u = anchor(s, "u"), v = anchor(s, "v");
    require(is_bk_root(t, u, v, 3), "v must be a B3-child of u");
    auto b1 = b1_children(t, u, v);
    require(b1.size() >= 4, "u needs at least four B1-branch children");
    int r1 = b1[0], r2 = b1[1], m1 = b1[2], m2 = b1[3];
    int arm = arm2_starts(t, v).front();
    return {{arm, v, r1}, {m1, u, r2}, {m2, u, r2}};
}

// T-B2-a / T1-B2: one arm of the B2-child a moves up to u (degree 3).
std::vector<Move> moves_arm_up(const Tree& t, const TransformationSpec& s) {
    int u = anchor(s, "u"), a = anchor(s, "a");
    require(t.degree(u) == 3, "u needs degree 3");
    require(is_bk_root(t, u, a, 2), "a must be a B2-child of u");
    return {{arm2_starts(t, a).front(), a, u}};
}

// T2-B2: w(3) with children u (B2-child a + arm p) and v (two B2
// children b1,b2); everything below u,v moves to w, u becomes a leaf
// under v.
std::vector<Move> moves_t2_b2(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w"), u = anchor(s, "u"), v = anchor(s, "v");
    require(t.degree(w) == 3, "w needs degree 3");
    require(t.degree(u) == 3 && t.degree(v) == 3, "u,v need degree 3");
    auto b2u = bk_children(t, u, 2, w);
    auto armsu = arm2_starts(t, u);
    require(b2u.size() == 1 && armsu.size() == 1, "u needs one B2-child and one arm");
    auto b2v = bk_children(t, v, 2, w);
    require(b2v.size() == 2, "v needs two B2-children");
    return {{b2u[0], u, w}, {armsu[0], u, w}, {b2v[0], v, w}, {b2v[1], v, w}, {u, w, v}};
}

// T3-B2: w(4) with children u (as above), v1, v2; the children of v1,v2
// move to w and v2 becomes a child of v1.
std::vector<Move> moves_t3_b2(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w"), u = anchor(s, "u");
    int v1 = anchor(s, "v1"), v2 = anchor(s, "v2");
    require(t.degree(w) == 4, "w needs degree 4");
    require(t.degree(u) == 3, "u needs degree 3");
    std::vector<Move> mv;
    for (int c : t.neighbors(v1))
        if (c != w) mv.push_back({c, v1, w});
    for (int c : t.neighbors(v2))
        if (c != w) mv.push_back({c, v2, w});
    mv.push_back({v2, w, v1});
    return mv;
}

// T11 / T12 / T2-lemma-B2-20: local redistribution under w. x1 gives up
// both arms and carries y1 under a raised B2-child; y1's arms raise two
// more; w loses exactly {x1, y1-side}.
std::vector<Move> moves_t11(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w");
    auto b2 = bk_children(t, w, 2);
    require(b2.size() >= 7, "w needs at least seven B2-children");
    int v1 = b2[0], v2 = b2[1], v3 = b2[2], v4 = b2[3], v5 = b2[4];
    int x1 = b2[5], y1 = b2[6];
    auto px = arm2_starts(t, x1), qy = arm2_starts(t, y1);
    return {{px[0], x1, v1}, {px[1], x1, v2}, {qy[0], y1, v3}, {qy[1], y1, v5},
            {y1, w, x1},     {x1, w, v4}};
}

// T1-lemma-B2-10 / T1-lemma-B2-20: w hands its subtrees to its parent z;
// x carries w, y parks on a moved arm's leaf.
std::vector<Move> moves_t1_b2_cap(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w"), z = anchor(s, "z");
    auto b2 = bk_children(t, w, 2, z);
    require(b2.size() >= 7, "w needs at least seven B2-children");
    require(std::find(t.neighbors(w).begin(), t.neighbors(w).end(), z) != t.neighbors(w).end(),
            "z must be w's parent");
    int v1 = b2[0], v2 = b2[1], v3 = b2[2], v4 = b2[3], v5 = b2[4];
    int x = b2[5], y = b2[6];
    std::vector<Move> mv;
    for (int c : t.neighbors(w))
        if (c != z && c != x && c != y) mv.push_back({c, w, z});  // all other branches
    auto px = arm2_starts(t, x), qy = arm2_starts(t, y);
    mv.push_back({px[0], x, v1});
    mv.push_back({px[1], x, v2});
    mv.push_back({qy[0], y, v3});
    mv.push_back({qy[1], y, v4});
    mv.push_back({x, w, v5});
    mv.push_back({y, w, leaf_of_arm(t, x, px[0])});
    mv.push_back({w, z, x});
    return mv;
}

// T21: as above, but three degree-3 children of z are raised too.
std::vector<Move> moves_t21(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w"), z = anchor(s, "z");
    auto b2 = bk_children(t, w, 2, z);
    require(b2.size() >= 8, "w needs at least eight B2-children");
    auto sz = bk_children(t, z, 2, w);
    require(sz.size() >= 3, "z needs three degree-3 children");
    int s1 = sz[0], s2 = sz[1], s3 = sz[2];
    int v1 = b2[0], v2 = b2[1], v3 = b2[2], v4 = b2[3], v5 = b2[4];
    int x1 = b2[5], x2 = b2[6], y = b2[7];
    std::vector<Move> mv;
    for (int c : t.neighbors(w))
        if (c != z && c != x1 && c != x2 && c != y) mv.push_back({c, w, z});
    auto p1 = arm2_starts(t, x1), p2 = arm2_starts(t, x2), q = arm2_starts(t, y);
    mv.push_back({p1[0], x1, v3});
    mv.push_back({p1[1], x1, v4});
    mv.push_back({p2[0], x2, v5});
    mv.push_back({p2[1], x2, s1});
    mv.push_back({q[0], y, s2});
    mv.push_back({q[1], y, s3});
    mv.push_back({x1, w, v1});
    mv.push_back({x2, w, v2});
    mv.push_back({y, w, x2});
    mv.push_back({w, z, x1});
    return mv;
}

// T221: three raised children of w take two arms each.
std::vector<Move> moves_t221(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w"), z = anchor(s, "z");
    auto b2 = bk_children(t, w, 2, z);
    require(b2.size() >= 8, "w needs at least eight B2-children");
    int v1 = b2[0], v2 = b2[1], v3 = b2[2], v4 = b2[3], v5 = b2[4];
    int x1 = b2[5], x2 = b2[6], y = b2[7];
    std::vector<Move> mv;
    for (int c : t.neighbors(w))
        if (c != z && c != x1 && c != x2 && c != y) mv.push_back({c, w, z});
    auto p1 = arm2_starts(t, x1), p2 = arm2_starts(t, x2), q = arm2_starts(t, y);
    mv.push_back({p1[0], x1, v1});
    mv.push_back({p1[1], x1, v1});
    mv.push_back({p2[0], x2, v2});
    mv.push_back({p2[1], x2, v2});
    mv.push_back({q[0], y, v3});
    mv.push_back({q[1], y, v3});
    mv.push_back({x1, w, v4});
    mv.push_back({x2, w, v5});
    mv.push_back({y, w, x2});
    mv.push_back({w, z, x1});
    return mv;
}

// T222: eight raised children of w, one arm each.
std::vector<Move> moves_t222(const Tree& t, const TransformationSpec& s) {
    int w = anchor(s, "w"), z = anchor(s, "z");
    auto b2 = bk_children(t, w, 2, z);
    require(b2.size() >= 11, "w needs at least eleven B2-children");
    std::vector<Move> mv;
    int x1 = b2[8], x2 = b2[9], y = b2[10];
    for (int c : t.neighbors(w))
        if (c != z && c != x1 && c != x2 && c != y) mv.push_back({c, w, z});
    auto p1 = arm2_starts(t, x1), p2 = arm2_starts(t, x2), q = arm2_starts(t, y);
    mv.push_back({p1[0], x1, b2[0]});
    mv.push_back({p1[1], x1, b2[1]});
    mv.push_back({p2[0], x2, b2[2]});
    mv.push_back({p2[1], x2, b2[3]});
    mv.push_back({q[0], y, b2[4]});
    mv.push_back({q[1], y, b2[5]});
    mv.push_back({x1, w, b2[6]});
    mv.push_back({x2, w, b2[7]});
    mv.push_back({y, w, x2});
    mv.push_back({w, z, x1});
    return mv;
}

// T1-thm / T3-thm: wk (degree 4, three B2-children) donates two raised
// B2-branches to w1; its third child is dismantled in place.
std::vector<Move> moves_t1_thm(const Tree& t, const TransformationSpec& s) {
    int wk = anchor(s, "wk"), w1 = anchor(s, "w1");
    auto c = bk_children(t, wk, 2);
    require(t.degree(wk) == 4, "wk needs degree 4");
    require(c.size() == 3, "wk needs exactly three B2-children");
    auto arms = arm2_starts(t, c[2]);
    return {{arms[0], c[2], c[0]},
            {arms[1], c[2], c[1]},
            {c[0], wk, w1},
            {c[1], wk, w1}};
}

// T2-thm / T4-thm: wk of degree 5..7; two raised B2-branches and the
// plain rest move to w1; x keeps one arm, y parks on a leaf.
std::vector<Move> moves_t2_thm(const Tree& t, const TransformationSpec& s) {
    int wk = anchor(s, "wk"), w1 = anchor(s, "w1");
    auto c = bk_children(t, wk, 2);
    require(t.degree(wk) >= 5 && t.degree(wk) <= 7, "wk needs degree 5..7");
    require(static_cast<int>(c.size()) == t.degree(wk) - 1, "wk children must be B2-branches");
    int c1 = c[0], c2 = c[1], x = c[2], y = c[3];
    auto q = arm2_starts(t, y), p = arm2_starts(t, x);
    std::vector<Move> mv;
    mv.push_back({q[0], y, c1});
    mv.push_back({q[1], y, c2});
    mv.push_back({p[1], x, wk});
    mv.push_back({c1, wk, w1});
    mv.push_back({c2, wk, w1});
    for (size_t i = 4; i < c.size(); ++i) mv.push_back({c[i], wk, w1});
    mv.push_back({y, wk, leaf_of_arm(t, y, q[0])});
    return mv;
}

// T5: w2's B2-branches migrate to w1; one of them carries w2, the B1
// branch raises a third branch of w1.
std::vector<Move> moves_t5(const Tree& t, const TransformationSpec& s) {
    int w1 = anchor(s, "w1"), w2 = anchor(s, "w2");
    auto c = bk_children(t, w2, 2, w1);
    auto b1 = b1_children(t, w2, w1);
    require(c.size() >= 4, "w2 needs at least four B2-children");
    require(b1.size() == 1, "w2 needs exactly one B1-child");
    auto v = bk_children(t, w1, 2, w2);
    require(v.size() >= 4, "w1 needs at least four B2-children");
    int carrier = c.back();
    auto arms = arm2_starts(t, carrier);
    std::vector<Move> mv;
    mv.push_back({arms[0], carrier, v[0]});
    mv.push_back({arms[1], carrier, v[1]});
    for (size_t i = 0; i + 1 < c.size(); ++i) mv.push_back({c[i], w2, w1});
    mv.push_back({b1[0], w2, v[2]});
    mv.push_back({carrier, w2, v[3]});
    mv.push_back({w2, w1, carrier});
    return mv;
}

// T6: w1 and w2 are unrelated B2-parents; three raised branches and one
// plain branch move from w2 to w1.
std::vector<Move> moves_t6(const Tree& t, const TransformationSpec& s) {
    int w1 = anchor(s, "w1"), w2 = anchor(s, "w2");
    int z2 = anchor(s, "z2");
    auto c = bk_children(t, w2, 2, z2);
    auto b1 = b1_children(t, w2, z2);
    require(c.size() >= 6, "w2 needs six B2-children");
    require(b1.size() == 1, "w2 needs one B1-child");
    auto v = bk_children(t, w1, 2);
    require(!v.empty(), "w1 needs a B2-child");
    int c1 = c[0], c2 = c[1], c3 = c[2], x = c[3], y = c[4], c6 = c[5];
    auto p = arm2_starts(t, x), q = arm2_starts(t, y);
    std::vector<Move> mv;
    mv.push_back({q[0], y, c1});
    mv.push_back({q[1], y, c2});
    mv.push_back({p[1], x, c3});
    mv.push_back({c1, w2, w1});
    mv.push_back({c2, w2, w1});
    mv.push_back({c3, w2, w1});
    mv.push_back({c6, w2, w1});
    mv.push_back({b1[0], w2, v[0]});
    mv.push_back({y, w2, leaf_of_arm(t, y, q[0])});
    return mv;
}

const std::map<std::string, MoveFn>& registry() {
    static const std::map<std::string, MoveFn> r = {
        {"T-B1", moves_move_b1},
        {"T-B1-relaxed", moves_move_b1},
        {"T-proper-Tk", moves_move_b1},
        {"T1-B1", moves_t1_b1},
        {"T-B2-a", moves_arm_up},
        {"T1-B2", moves_arm_up},
        {"T2-B2", moves_t2_b2},
        {"T3-B2", moves_t3_b2},
        {"T11", moves_t11},
        {"T12", moves_t11},
        {"T2-lemma-B2-20", moves_t11},
        {"T1-lemma-B2-10", moves_t1_b2_cap},
        {"T1-lemma-B2-20", moves_t1_b2_cap},
        {"T21", moves_t21},
        {"T221", moves_t221},
        {"T222", moves_t222},
        {"T1-thm", moves_t1_thm},
        {"T3-thm", moves_t1_thm},
        {"T2-thm", moves_t2_thm},
        {"T4-thm", moves_t2_thm},
        {"T5", moves_t5},
        {"T6", moves_t6},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& transformation_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [k, _] : registry()) n.push_back(k);
        return n;
    }();
    return names;
}

TransformationResult apply_transformation(const Tree& t, const TransformationSpec& spec) {
    auto it = registry().find(spec.name);
    if (it == registry().end()) throw UnknownExpression("transformation " + spec.name);
    auto moves = it->second(t, spec);
    double predicted = closed_form_delta(t, moves);
    return {apply_moves(t, moves), predicted};
}

// ---- randomized instances --------------------------------------------

namespace {

// Straight-line tree builder; vertices are created on demand.
struct Grow {
    std::vector<Edge> edges;
    int n = 0;
    int vertex() { return n++; }
    int child(int parent) {
        int v = vertex();
        edges.emplace_back(parent, v);
        return v;
    }
    int arm2(int parent) {  // returns the arm start
        int x = child(parent);
        child(x);
        return x;
    }
    int b1(int parent) {
        int r = child(parent);
        arm2(r);
        return r;
    }
    int bk(int parent, int k) {
        int r = child(parent);
        for (int i = 0; i < k; ++i) arm2(r);
        return r;
    }
    // a chain above the local root, so u's parent can have high degree
    int stalk(int parent, int len) {
        int v = parent;
        for (int i = 0; i < len; ++i) v = child(v);
        return v;
    }
    Tree tree() const { return Tree::validate(n, edges); }
};

TransformationInstance inst_move_b1(const std::string& name, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k1d(1, 4), k2d(1, 4), wd(0, 3);
    int k1 = k1d(rng), k2 = k2d(rng);
    bool rooted = wd(rng) == 0;
    bool relaxed = name != "T-B1";
    Grow g;
    int u = g.vertex();
    int w = -1;
    if (!rooted) {
        w = g.child(u);  // parent side, give it weight
        for (int i = 0; i < wd(rng) + 2; ++i) g.arm2(w);
    }
    int v = g.bk(u, relaxed ? 2 : std::uniform_int_distribution<int>(2, 3)(rng));
    for (int i = 0; i < k1; ++i) g.b1(u);
    for (int i = 1; i < k2; ++i) g.bk(u, relaxed ? 2 : std::uniform_int_distribution<int>(2, 3)(rng));
    if (name == "T-proper-Tk")
        for (int i = 0; i < 6; ++i) g.bk(u, 2);  // k2 > 6 context
    TransformationSpec s{name, {{"u", u}, {"v", v}, {"w", w}}};
    return {g.tree(), s};
}

TransformationInstance inst_t1_b1(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> k1d(4, 5), extra(0, 2), wd(0, 1);
    Grow g;
    int u = g.vertex();
    if (wd(rng)) {
        int w = g.child(u);
        for (int i = 0; i < 3; ++i) g.arm2(w);
    }
    int v = g.bk(u, 3);
    int k1 = k1d(rng);
    for (int i = 0; i < k1; ++i) g.b1(u);
    for (int i = 0; i < extra(rng); ++i) g.bk(u, 3);
    TransformationSpec s{"T1-B1", {{"u", u}, {"v", v}}};
    return {g.tree(), s};
}

TransformationInstance inst_arm_up(const std::string& name, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> wdeg(3, 6);
    Grow g;
    int w = g.vertex();
    int u = g.child(w);
    int a = g.bk(u, 2);
    if (name == "T-B2-a") {
        g.bk(u, 2);  // second B2-child
    } else {
        g.arm2(u);  // pendant path child
    }
    for (int i = 0; i < wdeg(rng) - 1; ++i) g.bk(w, 2);
    TransformationSpec s{name, {{"u", u}, {"a", a}}};
    return {g.tree(), s};
}

TransformationInstance inst_t2_b2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> zdeg(2, 5);
    Grow g;
    int z = g.vertex();
    int w = g.child(z);
    int u = g.child(w);
    g.bk(u, 2);
    g.arm2(u);
    int v = g.child(w);
    g.bk(v, 2);
    g.bk(v, 2);
    for (int i = 0; i < zdeg(rng) - 1; ++i) g.bk(z, 2);
    TransformationSpec s{"T2-B2", {{"w", w}, {"u", u}, {"v", v}}};
    return {g.tree(), s};
}

TransformationInstance inst_t3_b2(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> vdeg(3, 4), zdeg(2, 4);
    Grow g;
    int z = g.vertex();
    int w = g.child(z);
    int u = g.child(w);
    g.bk(u, 2);
    g.arm2(u);
    int v1 = g.child(w);
    for (int i = 0; i < vdeg(rng) - 1; ++i) g.bk(v1, 2);
    int v2 = g.child(w);
    for (int i = 0; i < vdeg(rng) - 1; ++i) g.bk(v2, 2);
    for (int i = 0; i < zdeg(rng) - 1; ++i) g.bk(z, 3);
    TransformationSpec s{"T3-B2", {{"w", w}, {"u", u}, {"v1", v1}, {"v2", v2}}};
    return {g.tree(), s};
}

TransformationInstance inst_t11(const std::string& name, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n2d(7, 12), n3d(0, 2), zd(0, 1);
    Grow g;
    int z = g.vertex();
    int w = g.child(z);
    int n2 = n2d(rng);
    for (int i = 0; i < n2; ++i) g.bk(w, 2);
    if (name == "T12")
        for (int i = 0; i < n3d(rng) + 1; ++i) g.bk(w, std::uniform_int_distribution<int>(3, 4)(rng));
    if (name == "T2-lemma-B2-20")
        for (int i = 0; i < n3d(rng); ++i) g.bk(w, 3);
    if (zd(rng)) g.bk(z, 2);
    TransformationSpec s{name, {{"w", w}}};
    return {g.tree(), s};
}

TransformationInstance inst_t1_b2_cap(const std::string& name, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n2d(7, 9), zkids(1, 3), n3d(0, 2);
    Grow g;
    int zp = g.vertex();  // z's parent keeps z rooted above w
    int z = g.child(zp);
    int w = g.child(z);
    int n2 = n2d(rng);
    for (int i = 0; i < n2; ++i) g.bk(w, 2);
    if (name == "T1-lemma-B2-20")
        for (int i = 0; i < n3d(rng) + 1; ++i) g.bk(w, std::uniform_int_distribution<int>(3, 4)(rng));
    for (int i = 0; i < zkids(rng); ++i) g.bk(z, 3);
    TransformationSpec s{name, {{"w", w}, {"z", z}}};
    return {g.tree(), s};
}

TransformationInstance inst_t21(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n2d(8, 12), zkids(0, 2);
    Grow g;
    int zp = g.vertex();
    int z = g.child(zp);
    int w = g.child(z);
    int n2 = n2d(rng);
    for (int i = 0; i < n2; ++i) g.bk(w, 2);
    for (int i = 0; i < 3 + zkids(rng); ++i) g.bk(z, 2);
    TransformationSpec s{"T21", {{"w", w}, {"z", z}}};
    return {g.tree(), s};
}

TransformationInstance inst_t221(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n2d(8, 10), zkids(1, 2);
    Grow g;
    int zp = g.vertex();
    int z = g.child(zp);
    int w = g.child(z);
    for (int i = 0; i < n2d(rng); ++i) g.bk(w, 2);
    for (int i = 0; i < zkids(rng); ++i) g.bk(z, 4);
    TransformationSpec s{"T221", {{"w", w}, {"z", z}}};
    return {g.tree(), s};
}

TransformationInstance inst_t222(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n2d(11, 12), zkids(1, 2);
    Grow g;
    int zp = g.vertex();
    int z = g.child(zp);
    int w = g.child(z);
    for (int i = 0; i < n2d(rng); ++i) g.bk(w, 2);
    for (int i = 0; i < zkids(rng); ++i) g.bk(z, 4);
    TransformationSpec s{"T222", {{"w", w}, {"z", z}}};
    return {g.tree(), s};
}

TransformationInstance inst_thm(const std::string& name, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n1d(1, 6), nkd(4, 6), n13d(0, 2);
    bool small = (name == "T1-thm" || name == "T3-thm");
    bool child_case = (name == "T3-thm" || name == "T4-thm");
    Grow g;
    int z1 = g.vertex();
    int w1 = g.child(z1);
    int n1 = n1d(rng);
    for (int i = 0; i < n1; ++i) g.bk(w1, 2);
    for (int i = 0; i < n13d(rng); ++i) g.bk(w1, 3);
    int wk;
    if (child_case) {
        wk = g.child(w1);
    } else {
        int zk = g.child(z1);
        for (int i = 0; i < 2; ++i) g.bk(zk, 2);
        wk = g.child(zk);
    }
    int kids = small ? 3 : nkd(rng);
    for (int i = 0; i < kids; ++i) g.bk(wk, 2);
    TransformationSpec s{name, {{"wk", wk}, {"w1", w1}}};
    return {g.tree(), s};
}

TransformationInstance inst_t5(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n22d(4, 6), n12d(4, 6), n13d(0, 2), rooted(0, 1);
    Grow g;
    int w1 = g.vertex();
    if (rooted(rng)) {
        int z = g.child(w1);
        g.bk(z, 2);
    }
    for (int i = 0; i < n12d(rng); ++i) g.bk(w1, 2);
    for (int i = 0; i < n13d(rng); ++i) g.bk(w1, 3);
    int w2 = g.child(w1);
    for (int i = 0; i < n22d(rng); ++i) g.bk(w2, 2);
    g.b1(w2);
    TransformationSpec s{"T5", {{"w1", w1}, {"w2", w2}}};
    return {g.tree(), s};
}

TransformationInstance inst_t6(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n12d(6, 7), zdeg(1, 3);
    Grow g;
    int z1 = g.vertex();
    int w1 = g.child(z1);
    for (int i = 0; i < n12d(rng); ++i) g.bk(w1, 2);
    int z2 = g.child(z1);
    for (int i = 0; i < zdeg(rng); ++i) g.bk(z2, 3);
    int w2 = g.child(z2);
    for (int i = 0; i < 6; ++i) g.bk(w2, 2);
    g.b1(w2);
    TransformationSpec s{"T6", {{"w1", w1}, {"w2", w2}, {"z2", z2}}};
    return {g.tree(), s};
}

}  // namespace

TransformationInstance random_instance(const std::string& name, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    if (name == "T-B1" || name == "T-B1-relaxed" || name == "T-proper-Tk")
        return inst_move_b1(name, rng);
    if (name == "T1-B1") return inst_t1_b1(rng);
    if (name == "T-B2-a" || name == "T1-B2") return inst_arm_up(name, rng);
    if (name == "T2-B2") return inst_t2_b2(rng);
    if (name == "T3-B2") return inst_t3_b2(rng);
    if (name == "T11" || name == "T12" || name == "T2-lemma-B2-20") return inst_t11(name, rng);
    if (name == "T1-lemma-B2-10" || name == "T1-lemma-B2-20") return inst_t1_b2_cap(name, rng);
    if (name == "T21") return inst_t21(rng);
    if (name == "T221") return inst_t221(rng);
    if (name == "T222") return inst_t222(rng);
    if (name == "T1-thm" || name == "T2-thm" || name == "T3-thm" || name == "T4-thm")
        return inst_thm(name, rng);
    if (name == "T5") return inst_t5(rng);
    if (name == "T6") return inst_t6(rng);
    throw UnknownExpression("transformation " + name);
}

}  // namespace minabc
