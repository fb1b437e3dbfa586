#include "cak/combinatorics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "cak/error.hpp"

namespace cak {

// ---------------------------------------------------------------- swap pairs

SwapPair validate_swap_pair(std::vector<Label> rho, std::vector<int> sigma) {
    if (rho.empty()) fail(ErrorKind::InvalidInput, "swap pair has no labels");
    {
        std::vector<Label> sorted = rho;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) fail(ErrorKind::InvalidInput, "duplicate label '" + *dup + "' in rho");
    }
    const int n = static_cast<int>(rho.size());
    std::vector<int> perm(rho.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (size_t t = 0; t < sigma.size(); ++t) {
        const int h = sigma[t];
        if (h < 1 || h > n - 1)
            fail(ErrorKind::InvalidInput,
                 "height " + std::to_string(h) + " at position " + std::to_string(t + 1) + " is outside [1," +
                     std::to_string(n - 1) + "]");
        std::swap(perm[h - 1], perm[h]);
    }
    for (int i = 0; i < n; ++i)
        if (perm[i] != i) fail(ErrorKind::InvalidInput, "composition of the swaps is not the identity");
    return SwapPair{std::move(rho), std::move(sigma)};
}

std::vector<Label> order_after(const SwapPair& sp, size_t steps) {
    std::vector<Label> order = sp.rho;
    for (size_t t = 0; t < steps && t < sp.N(); ++t) std::swap(order[sp.sigma[t] - 1], order[sp.sigma[t]]);
    return order;
}

std::vector<IncidencePair> incidence_sequence(const SwapPair& sp) {
    std::vector<IncidencePair> out;
    out.reserve(sp.N());
    std::vector<Label> order = sp.rho;
    for (int h : sp.sigma) {
        out.push_back({order[h], order[h - 1]});
        std::swap(order[h - 1], order[h]);
    }
    return out;
}

SwapPair cyclic_shift(const SwapPair& sp) {
    if (sp.sigma.empty()) fail(ErrorKind::InvalidInput, "cyclic shift of a swap pair without swaps");
    SwapPair out = sp;
    std::swap(out.rho[sp.sigma[0] - 1], out.rho[sp.sigma[0]]);
    std::rotate(out.sigma.begin(), out.sigma.begin() + 1, out.sigma.end());
    return out;
}

SwapPair independent_transposition(const SwapPair& sp, size_t i) {
    if (i < 1 || i + 1 > sp.N())
        fail(ErrorKind::InvalidInput, "independent transposition index " + std::to_string(i) + " outside [1, N-1]");
    if (std::abs(sp.sigma[i - 1] - sp.sigma[i]) <= 1)
        fail(ErrorKind::InvalidInput, "swaps " + std::to_string(i) + " and " + std::to_string(i + 1) + " are not independent");
    SwapPair out = sp;
    std::swap(out.sigma[i - 1], out.sigma[i]);
    return out;
}

SwapPair restrict(const SwapPair& sp, const std::set<Label>& subset) {
    if (subset.empty()) fail(ErrorKind::InvalidInput, "restriction to an empty label set");
    for (const auto& l : subset)
        if (std::find(sp.rho.begin(), sp.rho.end(), l) == sp.rho.end())
            fail(ErrorKind::InvalidInput, "label '" + l + "' is not in the swap pair");
    std::vector<Label> order = sp.rho;
    std::vector<Label> rho;
    for (const auto& l : order)
        if (subset.count(l)) rho.push_back(l);
    std::vector<int> sigma;
    for (int h : sp.sigma) {
        if (subset.count(order[h - 1]) && subset.count(order[h])) {
            int below = 0;
            for (int p = 0; p < h - 1; ++p) below += subset.count(order[p]) ? 1 : 0;
            sigma.push_back(below + 1);
        }
        std::swap(order[h - 1], order[h]);
    }
    return validate_swap_pair(std::move(rho), std::move(sigma));
}

size_t crossing_count(const SwapPair& sp, const Label& i, const Label& j) {
    if (i == j) fail(ErrorKind::InvalidInput, "crossing count of a label with itself");
    size_t count = 0;
    for (const auto& p : incidence_sequence(sp))
        if ((p.upper == i && p.lower == j) || (p.upper == j && p.lower == i)) ++count;
    return count;
}

Layers layers(const SwapPair& sp) {
    std::map<Label, Label> parent;
    for (const auto& l : sp.rho) parent[l] = l;
    auto find = [&](Label x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& p : incidence_sequence(sp)) {
        Label a = find(p.upper), b = find(p.lower);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<Label, std::vector<Label>> classes;
    for (const auto& kv : parent) classes[find(kv.first)].push_back(kv.first);
    Layers out;
    for (auto& kv : classes) {
        if (kv.second.size() > 1) ++out.depth;
        out.partition.push_back(std::move(kv.second));
    }
    return out;
}

// ---------------------------------------------------------------- tableaux

Tableau tableau_of(const SwapPair& sp) {
    Tableau t;
    t.order = sp.rho;
    for (const auto& l : sp.rho) t.rows[l];
    for (const auto& p : incidence_sequence(sp)) {
        t.rows[p.upper].push_back(p.lower);
        t.rows[p.lower].push_back(p.upper);
    }
    return t;
}

namespace {

void check_shape(const Tableau& t) {
    if (t.order.empty()) fail(ErrorKind::InvalidInput, "tableau has no rows");
    if (t.order.size() != t.rows.size()) fail(ErrorKind::InvalidInput, "tableau row order and rows disagree");
    for (const auto& l : t.order)
        if (!t.rows.count(l)) fail(ErrorKind::InvalidInput, "tableau has no row for '" + l + "'");
    for (const auto& [l, row] : t.rows)
        for (const auto& x : row) {
            if (x == l) fail(ErrorKind::InvalidInput, "row '" + l + "' lists itself");
            if (!t.rows.count(x)) fail(ErrorKind::InvalidInput, "row '" + l + "' lists unknown label '" + x + "'");
        }
}

}  // namespace

std::vector<std::pair<Label, Label>> adjacent_pairs(const Tableau& t) {
    check_shape(t);
    std::map<Label, size_t> pos;
    for (size_t i = 0; i < t.order.size(); ++i) pos[t.order[i]] = i;
    std::vector<std::pair<Label, Label>> out;
    for (const auto& [j, row] : t.rows) {
        if (row.empty()) continue;
        const Label& k = row.front();
        const auto& other = t.rows.at(k);
        if (other.empty() || other.front() != j || !(j < k)) continue;
        const size_t pj = pos.at(j), pk = pos.at(k);
        if (pj + 1 != pk && pk + 1 != pj)
            fail(ErrorKind::Inconsistent, "rows '" + j + "' and '" + k + "' start with each other but are not adjacent",
                 "non_adjacent_rows:" + j + "," + k);
        out.emplace_back(pj < pk ? j : k, pj < pk ? k : j);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return pos.at(a.first) < pos.at(b.first); });
    return out;
}

Tableau bump(const Tableau& t, const Label& j, const Label& k) {
    const auto pairs = adjacent_pairs(t);
    const bool ok = std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
        return (p.first == j && p.second == k) || (p.first == k && p.second == j);
    });
    if (!ok) fail(ErrorKind::InvalidInput, "rows '" + j + "' and '" + k + "' are not an adjacent pair");
    Tableau out = t;
    for (const Label* l : {&j, &k}) {
        auto& row = out.rows[*l];
        std::rotate(row.begin(), row.begin() + 1, row.end());
    }
    auto pj = std::find(out.order.begin(), out.order.end(), j);
    auto pk = std::find(out.order.begin(), out.order.end(), k);
    std::iter_swap(pj, pk);
    return out;
}

SwapPair swap_pair_of(const Tableau& t) {
    check_shape(t);
    const size_t n = t.order.size();
    std::map<Label, size_t> cursor;
    size_t remaining = 0;
    for (const auto& [l, row] : t.rows) {
        cursor[l] = 0;
        remaining += row.size();
    }
    auto first = [&](const Label& l) -> const Label* {
        const auto& row = t.rows.at(l);
        const size_t c = cursor[l];
        return c < row.size() ? &row[c] : nullptr;
    };
    std::vector<Label> order = t.order;
    std::vector<int> sigma;
    while (remaining > 0) {
        bool moved = false;
        for (size_t i = 0; i + 1 < n; ++i) {
            const Label& lo = order[i];
            const Label& hi = order[i + 1];
            const Label* a = first(lo);
            const Label* b = first(hi);
            if (a && b && *a == hi && *b == lo) {
                ++cursor[lo];
                ++cursor[hi];
                remaining -= 2;
                sigma.push_back(static_cast<int>(i + 1));
                std::swap(order[i], order[i + 1]);
                moved = true;
                break;
            }
        }
        if (!moved) fail(ErrorKind::Inconsistent, "tableau cannot be swept: no adjacent pair with entries left");
    }
    if (order != t.order) fail(ErrorKind::Inconsistent, "tableau sweep does not return to its row order");
    return validate_swap_pair(t.order, std::move(sigma));
}

Periodicity periodicity(const Tableau& t) {
    size_t g = 0;
    for (const auto& kv : t.rows) g = std::gcd(g, kv.second.size());
    Periodicity out{1, t};
    if (g == 0) return out;
    for (size_t p = g; p > 1; --p) {
        if (g % p) continue;
        bool ok = true;
        for (const auto& [l, row] : t.rows) {
            const size_t len = row.size() / p;
            for (size_t i = len; i < row.size() && ok; ++i) ok = row[i] == row[i - len];
            if (!ok) break;
        }
        if (ok) {
            out.p = p;
            for (auto& [l, row] : out.period.rows) row.resize(row.size() / p);
            return out;
        }
    }
    return out;
}

Tableau concat_rows(const Tableau& a, const Tableau& b) {
    if (a.order != b.order) fail(ErrorKind::InvalidInput, "row-wise concatenation needs equal row orders");
    Tableau out = a;
    for (auto& [l, row] : out.rows) {
        const auto& tail = b.rows.at(l);
        row.insert(row.end(), tail.begin(), tail.end());
    }
    return out;
}

bool tableau_less(const Tableau& a, const Tableau& b) {
    if (a.order != b.order) return a.order < b.order;
    for (const auto& l : a.order) {
        const auto& x = a.rows.at(l);
        const auto& y = b.rows.at(l);
        const size_t m = std::min(x.size(), y.size());
        for (size_t i = 0; i < m; ++i)
            if (x[i] != y[i]) return x[i] < y[i];
        if (x.size() != y.size()) return x.size() < y.size();
    }
    return false;
}

namespace {

// A bump class in compact form: rows never change except by rotation, so a
// tableau in the class is the row order plus one rotation offset per row.
// Labels are replaced by their rank in string order, which preserves the
// lexicographic comparison of tableaux.
class Closure {
public:
    explicit Closure(const Tableau& t) {
        for (const auto& kv : t.rows) labels_.push_back(kv.first);
        for (size_t i = 0; i < labels_.size(); ++i) index_[labels_[i]] = static_cast<int>(i);
        for (const auto& l : labels_) {
            std::vector<int> row;
            for (const auto& x : t.rows.at(l)) row.push_back(index_.at(x));
            period_.push_back(rotation_period(row));
            rows_.push_back(std::move(row));
        }
        start_.order.clear();
        for (const auto& l : t.order) start_.order.push_back(index_.at(l));
        start_.off.assign(labels_.size(), 0);
    }

    struct State {
        std::vector<int> order;
        std::vector<int> off;
    };

    const State& start() const { return start_; }

    int first(const State& s, int l) const {
        const auto& row = rows_[static_cast<size_t>(l)];
        return row.empty() ? -1 : row[static_cast<size_t>(s.off[static_cast<size_t>(l)])];
    }

    // Row-order positions i such that rows i and i+1 start with each other.
    std::vector<size_t> adjacent(const State& s) const {
        std::vector<size_t> out;
        for (size_t i = 0; i + 1 < s.order.size(); ++i) {
            const int a = s.order[i], b = s.order[i + 1];
            if (first(s, a) == b && first(s, b) == a) out.push_back(i);
        }
        return out;
    }

    State bumped(const State& s, size_t i) const {
        State t = s;
        for (int l : {s.order[i], s.order[i + 1]}) {
            auto& o = t.off[static_cast<size_t>(l)];
            o = (o + 1) % period_[static_cast<size_t>(l)];
        }
        std::swap(t.order[i], t.order[i + 1]);
        return t;
    }

    // Encodes the tableau value itself, so keys from different closures are comparable.
    std::string key(const State& s) const {
        std::string k;
        for (int v : s.order) k.push_back(static_cast<char>(v));
        for (size_t l = 0; l < rows_.size(); ++l) {
            const auto& row = rows_[l];
            const size_t o = static_cast<size_t>(s.off[l]);
            k.push_back('|');
            for (size_t i = 0; i < row.size(); ++i) k.push_back(static_cast<char>(row[(o + i) % row.size()]));
        }
        return k;
    }

    bool less(const State& a, const State& b) const {
        if (a.order != b.order) return a.order < b.order;
        for (int l : a.order) {
            const auto& row = rows_[static_cast<size_t>(l)];
            const size_t n = row.size();
            const size_t oa = static_cast<size_t>(a.off[static_cast<size_t>(l)]);
            const size_t ob = static_cast<size_t>(b.off[static_cast<size_t>(l)]);
            if (oa == ob) continue;
            for (size_t i = 0; i < n; ++i) {
                const int x = row[(oa + i) % n], y = row[(ob + i) % n];
                if (x != y) return x < y;
            }
        }
        return false;
    }

    Tableau tableau(const State& s) const {
        Tableau t;
        for (int l : s.order) t.order.push_back(labels_[static_cast<size_t>(l)]);
        for (size_t l = 0; l < labels_.size(); ++l) {
            auto& row = t.rows[labels_[l]];
            const auto& base = rows_[l];
            for (size_t i = 0; i < base.size(); ++i)
                row.push_back(labels_[static_cast<size_t>(base[(static_cast<size_t>(s.off[l]) + i) % base.size()])]);
        }
        return t;
    }

    std::optional<State> state_of(const Tableau& t) const;

    // Breadth-first walk; `visit` returns false to stop early. Returns false when stopped.
    template <class Visit>
    bool walk(Visit&& visit, std::unordered_set<std::string>* seen_out = nullptr) const {
        std::unordered_set<std::string> local;
        auto& seen = seen_out ? *seen_out : local;
        std::deque<State> queue;
        seen.insert(key(start_));
        queue.push_back(start_);
        while (!queue.empty()) {
            State s = std::move(queue.front());
            queue.pop_front();
            if (!visit(s)) return false;
            for (size_t i : adjacent(s)) {
                State t = bumped(s, i);
                if (seen.insert(key(t)).second) queue.push_back(std::move(t));
            }
        }
        return true;
    }

private:
    // Smallest rotation mapping the row onto itself, so offsets name tableaux uniquely.
    static int rotation_period(const std::vector<int>& row) {
        const size_t n = row.size();
        for (size_t m = 1; m < n; ++m) {
            if (n % m != 0) continue;
            bool same = true;
            for (size_t i = m; i < n && same; ++i) same = row[i] == row[i - m];
            if (same) return static_cast<int>(m);
        }
        return std::max<int>(static_cast<int>(n), 1);
    }

    std::vector<Label> labels_;
    std::map<Label, int> index_;
    std::vector<std::vector<int>> rows_;
    std::vector<int> period_;
    State start_;
};

// The state of t within this class, if t has the same rows up to rotation.
std::optional<Closure::State> Closure::state_of(const Tableau& t) const {
    if (t.rows.size() != labels_.size()) return std::nullopt;
    State s;
    for (const auto& l : t.order) {
        auto it = index_.find(l);
        if (it == index_.end()) return std::nullopt;
        s.order.push_back(it->second);
    }
    s.off.assign(labels_.size(), 0);
    for (size_t l = 0; l < labels_.size(); ++l) {
        auto it = t.rows.find(labels_[l]);
        if (it == t.rows.end()) return std::nullopt;
        const auto& base = rows_[l];
        const auto& row = it->second;
        if (row.size() != base.size()) return std::nullopt;
        if (base.empty()) continue;
        bool found = false;
        for (size_t o = 0; o < base.size() && !found; ++o) {
            bool match = true;
            for (size_t i = 0; i < base.size() && match; ++i)
                match = labels_[static_cast<size_t>(base[(o + i) % base.size()])] == row[i];
            if (match) {
                s.off[l] = static_cast<int>(o);
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return s;
}

}  // namespace

std::vector<Tableau> bump_closure(const Tableau& t) {
    swap_pair_of(t);
    Closure c(t);
    std::vector<Tableau> out;
    c.walk([&](const Closure::State& s) {
        out.push_back(c.tableau(s));
        return true;
    });
    return out;
}

std::optional<Tableau> find_in_closure(const Tableau& t, const std::function<bool(const Tableau&)>& accept) {
    swap_pair_of(t);
    Closure c(t);
    std::optional<Tableau> found;
    c.walk([&](const Closure::State& s) {
        Tableau x = c.tableau(s);
        if (!accept(x)) return true;
        found = std::move(x);
        return false;
    });
    return found;
}

CombinatorialType canonical_form(const Tableau& t) {
    const SwapPair sp = swap_pair_of(t);
    Closure c(t);
    Closure::State best = c.start();
    c.walk([&](const Closure::State& s) {
        if (c.less(s, best)) best = s;
        return true;
    });
    CombinatorialType ct;
    ct.canonical = c.tableau(best);
    ct.layers = layers(sp);
    ct.periodicity = periodicity(t).p;
    return ct;
}

CombinatorialType canonical_form(const SwapPair& sp) { return canonical_form(tableau_of(sp)); }

bool equivalent(const SwapPair& a, const SwapPair& b) {
    {
        std::vector<Label> la = a.rho, lb = b.rho;
        std::sort(la.begin(), la.end());
        std::sort(lb.begin(), lb.end());
        if (la != lb) fail(ErrorKind::InvalidInput, "swap pairs have different label sets");
    }
    if (a.N() != b.N()) return false;
    const Tableau ta = tableau_of(a), tb = tableau_of(b);
    if (ta == tb) return true;
    Closure c(ta);
    const auto target = c.state_of(tb);
    if (!target) return false;  // rows differ by more than rotation
    const std::string goal = c.key(*target);
    return !c.walk([&](const Closure::State& s) { return c.key(s) != goal; });
}

// ---------------------------------------------------------------- configurations

namespace {

Tableau restrict_tableau(const Tableau& t, const std::vector<Label>& keep) {
    Tableau out;
    for (const auto& l : t.order)
        if (std::find(keep.begin(), keep.end(), l) != keep.end()) out.order.push_back(l);
    for (const auto& l : keep) out.rows[l] = t.rows.at(l);
    return out;
}

// One layer of the standard configuration, before wrapping angles.
void standard_layer(const Tableau& layer, const Rational& theta, std::vector<std::pair<Rational, AbstractCrossing>>& out) {
    size_t total = 0;
    for (const auto& kv : layer.rows) total += kv.second.size();
    const size_t N = total / 2;

    Closure c(layer);
    std::optional<Closure::State> best;
    c.walk([&](const Closure::State& s) {
        if (c.adjacent(s).size() == 1 && (!best || c.less(s, *best))) best = s;
        return true;
    });
    if (!best) fail(ErrorKind::InvalidInput, "no tableau with exactly one adjacent pair in the class of this layer");
    const Tableau lmin = c.tableau(*best);
    const Periodicity per = periodicity(lmin);
    const Rational delta = make_rational(1, Integer(static_cast<unsigned long>(N)));

    std::vector<Label> order = lmin.order;
    for (size_t k = 0; k < per.p; ++k) {
        const Rational shift = make_rational(Integer(static_cast<unsigned long>(k)), Integer(static_cast<unsigned long>(per.p)));
        std::map<Label, size_t> cursor;
        size_t remaining = 0;
        for (const auto& [l, row] : per.period.rows) {
            cursor[l] = 0;
            remaining += row.size();
        }
        auto first = [&](const Label& l) -> const Label* {
            const auto& row = per.period.rows.at(l);
            return cursor[l] < row.size() ? &row[cursor[l]] : nullptr;
        };
        for (size_t step = 0; remaining > 0; ++step) {
            std::vector<size_t> adj;
            for (size_t i = 0; i + 1 < order.size(); ++i) {
                const Label* a = first(order[i]);
                const Label* b = first(order[i + 1]);
                if (a && b && *a == order[i + 1] && *b == order[i]) adj.push_back(i);
            }
            if (adj.empty()) fail(ErrorKind::Internal, "standard configuration recursion got stuck");
            const Rational angle = theta + shift + Rational(Integer(static_cast<unsigned long>(step))) * delta;
            for (size_t i : adj) {
                out.push_back({angle, AbstractCrossing{order[i + 1], order[i], Turn(Rational(1))}});
                ++cursor[order[i]];
                ++cursor[order[i + 1]];
                remaining -= 2;
                std::swap(order[i], order[i + 1]);
            }
        }
    }
    if (order != lmin.order) fail(ErrorKind::Internal, "standard configuration does not close up");
}

}  // namespace

AbstractConfiguration standard_configuration(const CombinatorialType& type, const Turn& theta) {
    const Tableau& t = type.canonical;
    swap_pair_of(t);
    const Layers ls = layers(swap_pair_of(t));
    std::vector<std::pair<Rational, AbstractCrossing>> events;
    for (const auto& cls : ls.partition) {
        if (cls.size() < 2) continue;
        standard_layer(restrict_tableau(t, cls), theta.value(), events);
    }
    for (auto& e : events) e.second.angle = Turn::wrap(e.first);
    std::stable_sort(events.begin(), events.end(),
                     [](const auto& a, const auto& b) { return a.second.angle < b.second.angle; });
    AbstractConfiguration config;
    config.labels = t.order;
    for (auto& e : events) config.crossings.push_back(std::move(e.second));
    for (size_t i = 0; i + 1 < config.crossings.size(); ++i) {
        const auto& x = config.crossings[i];
        for (size_t j = i + 1; j < config.crossings.size() && config.crossings[j].angle == x.angle; ++j) {
            const auto& y = config.crossings[j];
            if (x.first == y.first || x.first == y.second || x.second == y.first || x.second == y.second)
                fail(ErrorKind::Internal, "standard configuration has overlapping crossings at one angle");
        }
    }
    return config;
}

SwapPair abstract_swap_pair(const AbstractConfiguration& config) {
    const auto& cs = config.crossings;
    for (size_t i = 0; i < cs.size(); ++i) {
        if (cs[i].first == cs[i].second) fail(ErrorKind::InvalidInput, "crossing of a label with itself");
        if (i > 0 && cs[i].angle < cs[i - 1].angle) fail(ErrorKind::InvalidInput, "crossings are not sorted by angle");
        for (size_t j = i + 1; j < cs.size() && cs[j].angle == cs[i].angle; ++j)
            if (cs[i].first == cs[j].first || cs[i].first == cs[j].second || cs[i].second == cs[j].first ||
                cs[i].second == cs[j].second)
                fail(ErrorKind::InvalidInput, "crossings at one angle share a label");
    }

    std::vector<Label> all = config.labels;
    {
        std::vector<Label> sorted = all;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorKind::InvalidInput, "duplicate label in configuration");
        std::set<Label> known(sorted.begin(), sorted.end());
        for (const auto& c : cs)
            for (const Label* l : {&c.first, &c.second})
                if (!known.count(*l)) {
                    if (!config.labels.empty()) fail(ErrorKind::InvalidInput, "crossing label '" + *l + "' missing from labels");
                    known.insert(*l);
                    all.push_back(*l);
                }
        if (config.labels.empty()) std::sort(all.begin(), all.end());
    }
    if (all.empty()) fail(ErrorKind::InvalidInput, "configuration has no labels");

    // Relative heights inside each layer: first is directly above second at its
    // crossing, and every crossing moves first down and second up by one.
    std::map<Label, long> delta;
    std::map<Label, std::vector<std::pair<Label, long>>> edges;  // h[u] = h[v] + w
    for (const auto& l : all) delta[l] = 0;
    for (const auto& c : cs) {
        const long w = 1 + delta[c.second] - delta[c.first];
        edges[c.first].push_back({c.second, w});
        edges[c.second].push_back({c.first, -w});
        --delta[c.first];
        ++delta[c.second];
    }
    std::map<Label, long> height;
    std::vector<std::vector<Label>> blocks;
    for (const auto& root : all) {
        if (height.count(root)) continue;
        std::vector<Label> block{root};
        height[root] = 0;
        for (size_t i = 0; i < block.size(); ++i) {
            const Label u = block[i];
            for (const auto& [v, w] : edges[u]) {
                const long hv = height[u] - w;
                auto it = height.find(v);
                if (it == height.end()) {
                    height[v] = hv;
                    block.push_back(v);
                } else if (it->second != hv) {
                    fail(ErrorKind::Inconsistent, "crossings force inconsistent heights for '" + v + "'",
                         "inconsistent_height:" + v);
                }
            }
        }
        std::sort(block.begin(), block.end(), [&](const Label& x, const Label& y) { return height[x] < height[y]; });
        for (size_t i = 0; i < block.size(); ++i)
            if (height[block[i]] - height[block[0]] != static_cast<long>(i))
                fail(ErrorKind::Inconsistent, "crossings do not fit a contiguous stack of curves", "non_contiguous:" + root);
        blocks.push_back(std::move(block));
    }
    // Blocks are stacked by the position of their lowest-indexed member in `all`.
    std::map<Label, size_t> hint;
    for (size_t i = 0; i < all.size(); ++i) hint[all[i]] = i;
    auto anchor = [&](const std::vector<Label>& b) {
        size_t m = all.size();
        for (const auto& l : b) m = std::min(m, hint[l]);
        return m;
    };
    std::sort(blocks.begin(), blocks.end(), [&](const auto& x, const auto& y) { return anchor(x) < anchor(y); });
    std::vector<Label> rho;
    for (const auto& b : blocks) rho.insert(rho.end(), b.begin(), b.end());

    std::map<Label, size_t> pos;
    for (size_t i = 0; i < rho.size(); ++i) pos[rho[i]] = i;
    std::vector<Label> order = rho;
    std::vector<int> sigma;
    for (const auto& c : cs) {
        const size_t lo = pos[c.second], hi = pos[c.first];
        if (hi != lo + 1)
            fail(ErrorKind::Inconsistent, "crossing " + c.first + "," + c.second + " is between non-adjacent curves",
                 "non_adjacent:" + c.first + "," + c.second);
        std::swap(order[lo], order[hi]);
        pos[order[lo]] = lo;
        pos[order[hi]] = hi;
        sigma.push_back(static_cast<int>(lo + 1));
    }
    if (order != rho) fail(ErrorKind::Inconsistent, "configuration sweep does not return to its initial order");
    return validate_swap_pair(std::move(rho), std::move(sigma));
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Enumerator {
    size_t n, N;
    std::optional<size_t> k;
    std::vector<Label> labels;

    // Canonical tableaux found from the identity order, plus every visited state.
    std::unordered_set<std::string> seen;
    std::vector<Tableau> classes;

    std::vector<int> perm;
    std::vector<int> sigma;
    std::vector<int> counts;  // per unordered pair, index a*n+b with a < b

    int inversions() const {
        int inv = 0;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
        return inv;
    }

    void leaf() {
        if (k)
            for (size_t a = 0; a < n; ++a)
                for (size_t b = a + 1; b < n; ++b)
                    if (static_cast<size_t>(counts[a * n + b]) != *k) return;
        const Tableau t = tableau_of(SwapPair{labels, sigma});
        Closure c(t);
        if (seen.count(c.key(c.start()))) return;
        Closure::State best = c.start();
        c.walk(
            [&](const Closure::State& s) {
                if (c.less(s, best)) best = s;
                return true;
            },
            &seen);
        classes.push_back(c.tableau(best));
    }

    void dfs(size_t depth) {
        const int inv = inversions();
        const int left = static_cast<int>(N - depth);
        if (inv > left || (left - inv) % 2) return;
        if (depth == N) {
            leaf();
            return;
        }
        for (size_t h = 1; h < n; ++h) {
            int a = perm[h - 1], b = perm[h];
            const size_t slot = static_cast<size_t>(std::min(a, b)) * n + static_cast<size_t>(std::max(a, b));
            if (k && static_cast<size_t>(counts[slot]) >= *k) continue;
            ++counts[slot];
            std::swap(perm[h - 1], perm[h]);
            sigma.push_back(static_cast<int>(h));
            dfs(depth + 1);
            sigma.pop_back();
            std::swap(perm[h - 1], perm[h]);
            --counts[slot];
        }
    }
};

Tableau relabel(const Tableau& t, const std::map<Label, Label>& m) {
    Tableau out;
    for (const auto& l : t.order) out.order.push_back(m.at(l));
    for (const auto& [l, row] : t.rows) {
        auto& r = out.rows[m.at(l)];
        for (const auto& x : row) r.push_back(m.at(x));
    }
    return out;
}

}  // namespace

std::vector<CombinatorialType> enumerate_canonical(size_t n, size_t N, const EnumerateOptions& options) {
    if (n < 1 || n > 4 || N > 12) fail(ErrorKind::InvalidInput, "enumeration is limited to 1 <= n <= 4 and N <= 12");
    std::vector<Label> labels;
    for (size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));

    // Classes with rho = (1,...,n); all other rho are relabelings of these.
    std::vector<Tableau> base;
    const unsigned jobs = std::max(1u, options.jobs);
    if (n == 1 || N == 0 || jobs == 1) {
        Enumerator e{n, N, options.pair_crossings, labels, {}, {}, {}, {}, {}};
        e.perm.resize(n);
        std::iota(e.perm.begin(), e.perm.end(), 0);
        e.counts.assign(n * n, 0);
        if (n == 1) {
            if (N == 0) e.leaf();
        } else {
            e.dfs(0);
        }
        base = std::move(e.classes);
    } else {
        // Split on the first swap; classes found by several workers are merged below.
        std::vector<std::thread> pool;
        std::mutex m;
        std::vector<size_t> firsts;
        for (size_t h = 1; h < n; ++h) firsts.push_back(h);
        size_t next = 0;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    size_t h;
                    {
                        std::lock_guard lock(m);
                        if (next == firsts.size()) return;
                        h = firsts[next++];
                    }
                    Enumerator e{n, N, options.pair_crossings, labels, {}, {}, {}, {}, {}};
                    e.perm.resize(n);
                    std::iota(e.perm.begin(), e.perm.end(), 0);
                    e.counts.assign(n * n, 0);
                    const size_t slot = static_cast<size_t>(h - 1) * n + h;
                    if (e.k && *e.k == 0) continue;
                    ++e.counts[slot];
                    std::swap(e.perm[h - 1], e.perm[h]);
                    e.sigma.push_back(static_cast<int>(h));
                    e.dfs(1);
                    std::lock_guard lock(m);
                    for (auto& t : e.classes) base.push_back(std::move(t));
                }
            });
        for (auto& t : pool) t.join();
    }

    std::vector<Tableau> found;
    std::vector<Label> image = labels;
    do {
        std::map<Label, Label> m;
        for (size_t i = 0; i < n; ++i) m[labels[i]] = image[i];
        for (const auto& t : base) found.push_back(canonical_form(relabel(t, m)).canonical);
    } while (std::next_permutation(image.begin(), image.end()));
    std::sort(found.begin(), found.end(), tableau_less);
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<CombinatorialType> out;
    for (const auto& t : found) out.push_back(canonical_form(t));
    return out;
}

}  // namespace cak
