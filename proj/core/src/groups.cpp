#include "reflie/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "reflie/echelon.hpp"
#include "reflie/numtheory.hpp"

namespace reflie {

unsigned long long GroupParams::order() const {
    const unsigned long long huge = 1ull << 62;
    unsigned long long acc = 1;
    auto mul = [&](unsigned long long f) {
        if (f != 0 && acc > huge / f)
            acc = huge;
        else
            acc *= f;
    };
    for (long i = 2; i <= r; ++i) mul(static_cast<unsigned long long>(i));
    for (long i = 0; i < r; ++i) mul(static_cast<unsigned long long>(d));
    for (long i = 0; i + 1 < r; ++i) mul(static_cast<unsigned long long>(e));
    return acc;
}

std::string GroupParams::name() const {
    std::ostringstream os;
    os << "G(" << level() << "," << e << "," << r << ")";
    return os.str();
}

void GroupParams::validate() const {
    if (d < 1 || e < 1 || r < 1) throw std::invalid_argument("group params must be positive");
    if (level() == 1 && r == 1) throw std::invalid_argument("G(1,1,1) is degenerate; rejected");
    if (level() == 2 && e == 2 && r == 2)
        throw std::invalid_argument("G(2,2,2) is reducible; rejected");
}

Monomial Monomial::id(int r) {
    Monomial g;
    g.perm.resize(r);
    for (int i = 0; i < r; ++i) g.perm[i] = i;
    g.exps.assign(r, 0);
    return g;
}

Monomial Monomial::t_gen(int r) {
    Monomial g = id(r);
    g.exps[0] = 1;
    return g;
}

Monomial Monomial::t_diag(int r, int k, long power, long level) {
    Monomial g = id(r);
    g.exps[k - 1] = static_cast<int>(mod_pos(power, level));
    return g;
}

Monomial Monomial::s_gen(int r, int i) {
    Monomial g = id(r);
    std::swap(g.perm[i - 1], g.perm[i]);
    return g;
}

Monomial compose(const Monomial& g, const Monomial& h, long level) {
    const int r = g.rank();
    Monomial f;
    f.perm.resize(r);
    f.exps.resize(r);
    std::vector<int> ginv(r);
    for (int j = 0; j < r; ++j) ginv[g.perm[j]] = j;
    for (int j = 0; j < r; ++j) f.perm[j] = g.perm[h.perm[j]];
    for (int i = 0; i < r; ++i)
        f.exps[i] = static_cast<int>(mod_pos(g.exps[i] + h.exps[ginv[i]], level));
    return f;
}

Monomial inverse(const Monomial& g, long level) {
    const int r = g.rank();
    Monomial f;
    f.perm.resize(r);
    f.exps.resize(r);
    for (int j = 0; j < r; ++j) f.perm[g.perm[j]] = j;
    for (int j = 0; j < r; ++j) f.exps[j] = static_cast<int>(mod_pos(-g.exps[g.perm[j]], level));
    return f;
}

long t_degree(const Monomial& g, long level) {
    long s = 0;
    for (int a : g.exps) s += a;
    return mod_pos(s, level);
}

Mat<Cyc> to_matrix(const Monomial& g, long level) {
    const int r = g.rank();
    Mat<Cyc> m(r, r, Cyc::zero(level));
    for (int j = 0; j < r; ++j) m(g.perm[j], j) = Cyc::zeta(level, g.exps[g.perm[j]]);
    return m;
}

Word word_factor(const Monomial& g, long level) {
    const int r = g.rank();
    Monomial cur = g;
    std::vector<int> sletters;
    for (;;) {
        int j = -1;
        for (int i = 0; i + 1 < r; ++i)
            if (cur.perm[i] > cur.perm[i + 1]) {
                j = i;
                break;
            }
        if (j < 0) break;
        cur = compose(cur, Monomial::s_gen(r, j + 1), level);
        sletters.push_back(j + 1);
    }
    Word out;
    for (int k = 1; k <= r; ++k)
        if (cur.exps[k - 1] != 0) out.push_back({true, k, cur.exps[k - 1]});
    for (auto it = sletters.rbegin(); it != sletters.rend(); ++it) out.push_back({false, *it, 1});
    return out;
}

Monomial evaluate_word(const Word& w, int r, long level) {
    Monomial acc = Monomial::id(r);
    for (const WordAtom& a : w) {
        Monomial f = a.diagonal ? Monomial::t_diag(r, a.index, a.power, level)
                                : Monomial::s_gen(r, a.index);
        acc = compose(acc, f, level);
    }
    return acc;
}

std::vector<std::pair<std::string, long>> flatten_word(const Word& w) {
    std::vector<std::pair<std::string, long>> out;
    for (const WordAtom& a : w) {
        if (!a.diagonal) {
            out.emplace_back("s" + std::to_string(a.index), 1);
            continue;
        }
        for (int i = a.index - 1; i >= 1; --i) out.emplace_back("s" + std::to_string(i), 1);
        out.emplace_back("t", a.power);
        for (int i = 1; i <= a.index - 1; ++i) out.emplace_back("s" + std::to_string(i), 1);
    }
    return out;
}

std::vector<std::pair<std::string, Monomial>> series_generators(const GroupParams& p) {
    const int r = static_cast<int>(p.r);
    const long m = p.level();
    std::vector<std::pair<std::string, Monomial>> gens;
    if (p.d > 1) {
        Monomial te = Monomial::id(r);
        te.exps[0] = static_cast<int>(mod_pos(p.e, m));
        gens.emplace_back(p.e == 1 ? "t" : "t^e", te);
    }
    if (p.e > 1 && r >= 2) {
        // s'_1 = t s_1 t^-1. For d = 1 this is the conjugate of s_1 by
        // diag(exp(2 pi i/e), 1, ..., 1); taking the full t keeps the set
        // generating when d = 2 (conjugating by t^d only reaches the
        // subgroup with every exponent divisible by d).
        Monomial t = Monomial::t_gen(r);
        Monomial s1p = compose(compose(t, Monomial::s_gen(r, 1), m), inverse(t, m), m);
        gens.emplace_back("s1'", s1p);
    }
    for (int i = 1; i < r; ++i) gens.emplace_back("s" + std::to_string(i), Monomial::s_gen(r, i));
    return gens;
}

namespace {

nlohmann::json monomial_to_json(const Monomial& g) {
    return nlohmann::json{{"perm", g.perm}, {"exps", g.exps}};
}

Monomial monomial_from_json(const nlohmann::json& j) {
    Monomial g;
    g.perm = j.at("perm").get<std::vector<int>>();
    g.exps = j.at("exps").get<std::vector<int>>();
    return g;
}

std::string cache_path(const GroupParams& p) {
    const char* dir = std::getenv("REFLIE_GROUP_CACHE");
    if (!dir || !*dir) return {};
    std::ostringstream os;
    os << dir << "/group-" << p.level() << "-" << p.e << "-" << p.r << ".json";
    return os.str();
}

}  // namespace

std::shared_ptr<const Group> Group::make(GroupParams params, unsigned long long cap) {
    params.validate();
    unsigned long long expected = params.order();
    if (expected > cap)
        throw CapExceeded(params.name() + " has order " + std::to_string(expected) +
                          " above the enumeration cap " + std::to_string(cap));

    auto g = std::shared_ptr<Group>(new Group());
    g->params_ = params;
    g->level_ = params.level();
    g->r_ = static_cast<int>(params.r);
    g->gens_ = series_generators(params);

    std::string cache = cache_path(params);
    bool loaded = false;
    if (!cache.empty()) {
        std::ifstream in(cache);
        if (in) {
            try {
                nlohmann::json j;
                in >> j;
                for (const auto& je : j.at("elements")) {
                    Monomial m = monomial_from_json(je);
                    g->index_.emplace(m, static_cast<int>(g->elements_.size()));
                    g->elements_.push_back(std::move(m));
                }
                loaded = g->elements_.size() == expected;
            } catch (const std::exception&) {
                loaded = false;
            }
            if (!loaded) {
                g->elements_.clear();
                g->index_.clear();
            }
        }
    }
    if (!loaded) {
        g->enumerate(expected, cap);
        if (!cache.empty()) {
            nlohmann::json j;
            j["params"] = {{"d", params.d}, {"e", params.e}, {"r", params.r}};
            auto arr = nlohmann::json::array();
            for (const Monomial& m : g->elements_) arr.push_back(monomial_to_json(m));
            j["elements"] = std::move(arr);
            std::ofstream out(cache);
            if (out) out << j;
        }
    }
    if (g->elements_.size() != expected)
        throw std::logic_error(params.name() + ": enumeration found " +
                               std::to_string(g->elements_.size()) + " elements, expected " +
                               std::to_string(expected));
    g->compute_classes();
    g->compute_reflections();
    return g;
}

std::shared_ptr<const Group> Group::make_subgroup(const Group& parent, std::vector<Monomial> gens,
                                                  unsigned long long cap) {
    auto g = std::shared_ptr<Group>(new Group());
    g->level_ = parent.level();
    g->r_ = parent.rank();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (!parent.contains(gens[i]))
            throw std::invalid_argument("subgroup generator not in parent group");
        g->gens_.emplace_back("g" + std::to_string(i + 1), gens[i]);
    }
    g->enumerate(0, cap);
    g->compute_classes();
    g->compute_reflections();
    return g;
}

void Group::enumerate(unsigned long long expected, unsigned long long cap) {
    Monomial e = Monomial::id(r_);
    elements_.push_back(e);
    index_.emplace(std::move(e), 0);
    std::deque<int> queue{0};
    while (!queue.empty()) {
        int i = queue.front();
        queue.pop_front();
        for (const auto& [name, gen] : gens_) {
            (void)name;
            Monomial next = compose(elements_[i], gen, level_);
            auto [it, fresh] = index_.emplace(next, static_cast<int>(elements_.size()));
            if (!fresh) continue;
            elements_.push_back(std::move(next));
            if (elements_.size() > cap || (expected && elements_.size() > expected))
                throw CapExceeded("group enumeration exceeded cap of " + std::to_string(cap));
            queue.push_back(it->second);
        }
    }
}

int Group::index_of(const Monomial& g) const {
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
}

int Group::compose_idx(int a, int b) const {
    int i = index_of(compose(elements_[a], elements_[b], level_));
    if (i < 0) throw std::logic_error("group not closed under composition");
    return i;
}

int Group::inverse_idx(int a) const {
    int i = index_of(inverse(elements_[a], level_));
    if (i < 0) throw std::logic_error("group not closed under inverse");
    return i;
}

void Group::compute_classes() {
    const int n = static_cast<int>(elements_.size());
    class_of_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (class_of_[i] >= 0) continue;
        int cls = static_cast<int>(classes_.size());
        std::vector<int> orbit;
        std::deque<int> queue{i};
        class_of_[i] = cls;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            orbit.push_back(x);
            for (const auto& [name, gen] : gens_) {
                (void)name;
                Monomial conj =
                    compose(compose(gen, elements_[x], level_), inverse(gen, level_), level_);
                int y = index_of(conj);
                if (y < 0) throw std::logic_error("conjugation left the group");
                if (class_of_[y] < 0) {
                    class_of_[y] = cls;
                    queue.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        class_reps_.push_back(orbit.front());
        classes_.push_back(std::move(orbit));
    }
}

int Group::class_of_inverse(int class_idx) const {
    return class_of_[inverse_idx(class_reps_[class_idx])];
}

void Group::compute_reflections() {
    const int n = static_cast<int>(elements_.size());
    signs_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const Monomial& g = elements_[i];
        // Permutation parity by inversion count (ranks are tiny).
        int inv = 0;
        for (int a = 0; a < r_; ++a)
            for (int b = a + 1; b < r_; ++b)
                if (g.perm[a] > g.perm[b]) ++inv;
        long deg = t_degree(g, level_);
        int root_sign;
        if (deg == 0)
            root_sign = 1;
        else if (2 * deg == level_)
            root_sign = -1;
        else
            root_sign = 0;  // determinant not real; sign() rejects later
        signs_[i] = (inv % 2 ? -1 : 1) * root_sign;
    }

    // Brute reflection test: involutive and fixes a hyperplane. The rank
    // test on matrix(g) - Id doubles as an oracle for the construction.
    for (int i = 0; i < n; ++i) {
        const Monomial& g = elements_[i];
        if (compose(g, g, level_) != Monomial::id(r_)) continue;
        Mat<Cyc> m = to_matrix(g, level_);
        SpanBasis<Cyc> span;
        Cyc one = Cyc::one(level_);
        for (int row = 0; row < r_; ++row) {
            std::vector<Cyc> v;
            v.reserve(r_);
            for (int col = 0; col < r_; ++col)
                v.push_back(row == col ? m(row, col) - one : m(row, col));
            span.insert(std::move(v));
        }
        if (span.dim() == 1) reflections_.elements.push_back(i);
    }
    std::vector<int> seen_class;
    for (int idx : reflections_.elements) {
        int c = class_of_[idx];
        auto it = std::find(seen_class.begin(), seen_class.end(), c);
        size_t pos;
        if (it == seen_class.end()) {
            seen_class.push_back(c);
            reflections_.classes.emplace_back();
            pos = reflections_.classes.size() - 1;
        } else {
            pos = static_cast<size_t>(it - seen_class.begin());
        }
        reflections_.classes[pos].push_back(idx);
    }
}

int Group::sign(int element_idx) const {
    int s = signs_[element_idx];
    if (s == 0)
        throw std::domain_error("determinant of element is not +-1 (group has d > 2 content)");
    return s;
}

}  // namespace reflie
