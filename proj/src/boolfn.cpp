#include "patmat/boolfn.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace patmat {

namespace {
constexpr int kMaxArity = 24;
constexpr int kExactTreeArity = 5;
}  // namespace

BooleanFunction::BooleanFunction(int arity, std::vector<int8_t> table)
    : arity_(arity), table_(std::move(table)) {
    if (arity < 1 || arity > kMaxArity)
        throw std::length_error("BooleanFunction: arity out of range");
    if (table_.size() != (1ull << arity))
        throw std::invalid_argument("BooleanFunction: table length != 2^t");
    for (int8_t v : table_)
        if (v != 1 && v != -1)
            throw std::invalid_argument("BooleanFunction: values must be +-1");
}

bool BooleanFunction::is_constant() const {
    for (int8_t v : table_)
        if (v != table_[0]) return false;
    return true;
}

bool BooleanFunction::is_symmetric() const {
    std::vector<int8_t> by_weight(arity_ + 1, 0);
    for (uint32_t x = 0; x < table_size(); ++x) {
        int w = __builtin_popcount(x);
        if (by_weight[w] == 0) by_weight[w] = table_[x];
        else if (by_weight[w] != table_[x]) return false;
    }
    return true;
}

std::string BooleanFunction::to_hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    uint32_t size = table_size();
    for (uint32_t base = 0; base < size; base += 4) {
        int nib = 0;
        for (uint32_t k = 0; k < 4 && base + k < size; ++k)
            if (table_[base + k] == -1) nib |= 8 >> k;
        out.push_back(digits[nib]);
    }
    return out;
}

BooleanFunction BooleanFunction::from_hex(int arity, const std::string& hex) {
    if (arity < 1 || arity > kMaxArity)
        throw std::length_error("from_hex: arity out of range");
    uint32_t size = 1u << arity;
    uint32_t need = (size + 3) / 4;
    if (hex.size() != need)
        throw std::invalid_argument("from_hex: expected " + std::to_string(need) +
                                    " hex digits");
    std::vector<int8_t> table(size, 1);
    for (uint32_t d = 0; d < need; ++d) {
        char c = hex[d];
        int nib;
        if (c >= '0' && c <= '9') nib = c - '0';
        else if (c >= 'a' && c <= 'f') nib = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') nib = c - 'A' + 10;
        else throw std::invalid_argument("from_hex: bad hex digit");
        for (uint32_t k = 0; k < 4 && 4 * d + k < size; ++k)
            if (nib & (8 >> k)) table[4 * d + k] = -1;
    }
    return BooleanFunction(arity, std::move(table));
}

Predicate::Predicate(int n_, std::vector<int8_t> v) : n(n_), values(std::move(v)) {
    if (n < 1) throw std::invalid_argument("Predicate: n must be >= 1");
    if (values.size() != static_cast<std::size_t>(n + 1))
        throw std::invalid_argument("Predicate: needs n+1 values");
    for (int8_t x : values)
        if (x != 1 && x != -1) throw std::invalid_argument("Predicate: values must be +-1");
}

BooleanFunction from_predicate(const Predicate& d, int t) {
    if (t > d.n) throw std::invalid_argument("from_predicate: t exceeds predicate range");
    std::vector<int8_t> table(1u << t);
    for (uint32_t x = 0; x < table.size(); ++x) table[x] = d.values[__builtin_popcount(x)];
    return BooleanFunction(t, std::move(table));
}

L0L1 l0_l1(const Predicate& d) {
    // The constant range [l0, n-l1] always contains floor(n/2); extending
    // the constant run around that point minimizes both ends at once.
    int mid = d.n / 2;
    int lo = mid, hi = mid;
    while (lo > 0 && d.values[lo - 1] == d.values[mid]) --lo;
    while (hi < d.n && d.values[hi + 1] == d.values[mid]) ++hi;
    return L0L1{lo, d.n - hi, false};
}

FourierSpectrum fourier(const BooleanFunction& f) {
    // In-place Walsh-Hadamard over int64, then exact 2^-t scaling.
    const int t = f.arity();
    std::vector<long long> a(f.table().begin(), f.table().end());
    for (uint32_t len = 1; len < a.size(); len <<= 1)
        for (uint32_t i = 0; i < a.size(); i += len << 1)
            for (uint32_t j = i; j < i + len; ++j) {
                long long u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
    FourierSpectrum s{t, {}};
    s.coeff.reserve(a.size());
    Rational scale = Rational::pow2(-t);
    for (long long v : a) s.coeff.push_back(Rational(v) * scale);
    return s;
}

FourierSpectrum fourier_table(int arity, const std::vector<Rational>& values) {
    if (values.size() != (1ull << arity))
        throw std::invalid_argument("fourier_table: length != 2^t");
    std::vector<Rational> a = values;
    for (uint32_t len = 1; len < a.size(); len <<= 1)
        for (uint32_t i = 0; i < a.size(); i += len << 1)
            for (uint32_t j = i; j < i + len; ++j) {
                Rational u = a[j], v = a[j + len];
                a[j] = u + v;
                a[j + len] = u - v;
            }
    Rational scale = Rational::pow2(-arity);
    for (auto& v : a) v *= scale;
    return FourierSpectrum{arity, std::move(a)};
}

Rational evaluate_spectrum(const FourierSpectrum& s, uint32_t x) {
    Rational v(0);
    for (uint32_t mask = 0; mask < s.coeff.size(); ++mask) {
        if (s.coeff[mask].is_zero()) continue;
        if (character(mask, x) > 0) v += s.coeff[mask];
        else v -= s.coeff[mask];
    }
    return v;
}

Rational FourierSpectrum::max_abs() const {
    Rational best(0);
    for (const auto& c : coeff) {
        Rational a = c.abs();
        if (a > best) best = a;
    }
    return best;
}

int FourierSpectrum::degree() const {
    int d = 0;
    for (uint32_t mask = 0; mask < coeff.size(); ++mask)
        if (!coeff[mask].is_zero()) d = std::max(d, __builtin_popcount(mask));
    return d;
}

int degree(const BooleanFunction& f) { return fourier(f).degree(); }

// --- catalog ---------------------------------------------------------------

namespace {
BooleanFunction from_rule(int t, int8_t (*rule)(uint32_t, int)) {
    std::vector<int8_t> table(1u << t);
    for (uint32_t x = 0; x < table.size(); ++x) table[x] = rule(x, t);
    return BooleanFunction(t, std::move(table));
}
}  // namespace

BooleanFunction make_or(int t) {
    return from_rule(t, [](uint32_t x, int) -> int8_t { return x == 0 ? 1 : -1; });
}

BooleanFunction make_and(int t) {
    return from_rule(t, [](uint32_t x, int t_) -> int8_t {
        return x == (1u << t_) - 1 ? -1 : 1;
    });
}

BooleanFunction make_parity(int t) {
    return from_rule(t, [](uint32_t x, int) -> int8_t {
        return (__builtin_popcount(x) & 1) ? -1 : 1;
    });
}

BooleanFunction make_majority(int t) {
    return from_rule(t, [](uint32_t x, int t_) -> int8_t {
        return 2 * __builtin_popcount(x) > t_ ? -1 : 1;
    });
}

BooleanFunction make_threshold(int t, int k) {
    std::vector<int8_t> table(1u << t);
    for (uint32_t x = 0; x < table.size(); ++x)
        table[x] = __builtin_popcount(x) >= k ? -1 : 1;
    return BooleanFunction(t, std::move(table));
}

BooleanFunction make_constant(int t, int value) {
    if (value != 1 && value != -1) throw std::invalid_argument("make_constant: value must be +-1");
    return BooleanFunction(t, std::vector<int8_t>(1u << t, static_cast<int8_t>(value)));
}

BooleanFunction make_omb(int t) {
    std::vector<int8_t> table(1u << t);
    for (uint32_t x = 0; x < table.size(); ++x) {
        long long acc = 1, pw = 1;
        for (int i = 1; i <= t; ++i) {
            pw *= -2;
            if (bit_of(x, i)) acc += pw;
        }
        table[x] = acc > 0 ? 1 : -1;  // acc is odd, never zero
    }
    return BooleanFunction(t, std::move(table));
}

BooleanFunction make_mp(int m, int k) {
    if (m < 1 || k < 1) throw std::invalid_argument("make_mp: m, k must be >= 1");
    long long vars = static_cast<long long>(m) * k;
    if (vars > kMaxArity) throw std::length_error("make_mp: arity overflow");
    int t = static_cast<int>(vars);
    std::vector<int8_t> table(1u << t);
    for (uint32_t x = 0; x < table.size(); ++x) {
        bool any = false;
        for (int i = 0; i < m && !any; ++i) {
            uint32_t block = (x >> (i * k)) & ((1u << k) - 1);
            any = (block == (1u << k) - 1);
        }
        table[x] = any ? -1 : 1;
    }
    return BooleanFunction(t, std::move(table));
}

BooleanFunction catalog_function(const std::string& name, int t, const std::string& params) {
    if (name == "or") return make_or(t);
    if (name == "and") return make_and(t);
    if (name == "parity") return make_parity(t);
    if (name == "maj") return make_majority(t);
    if (name == "omb") return make_omb(t);
    if (name == "const") return make_constant(t, params == "-1" ? -1 : 1);
    if (name == "thr") {
        if (params.empty()) throw std::invalid_argument("catalog: thr needs k parameter");
        return make_threshold(t, std::stoi(params));
    }
    if (name == "mp") {
        // params "m,k"; arity argument must match m*k when positive
        auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("catalog: mp needs params m,k");
        int m = std::stoi(params.substr(0, comma));
        int k = std::stoi(params.substr(comma + 1));
        BooleanFunction f = make_mp(m, k);
        if (t > 0 && t != f.arity())
            throw std::invalid_argument("catalog: mp arity is m*k");
        return f;
    }
    throw std::invalid_argument("catalog: unknown function \"" + name + "\"");
}

Predicate predicate_disjointness(int n) {
    std::vector<int8_t> v(n + 1, -1);
    v[0] = 1;
    return Predicate(n, std::move(v));
}

Predicate predicate_parity(int n) {
    std::vector<int8_t> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = (i & 1) ? -1 : 1;
    return Predicate(n, std::move(v));
}

Predicate predicate_majority(int n) {
    std::vector<int8_t> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = 2 * i > n ? -1 : 1;
    return Predicate(n, std::move(v));
}

Predicate predicate_threshold(int n, int k) {
    std::vector<int8_t> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = i >= k ? -1 : 1;
    return Predicate(n, std::move(v));
}

Predicate predicate_constant(int n, int value) {
    return Predicate(n, std::vector<int8_t>(n + 1, static_cast<int8_t>(value)));
}

Predicate catalog_predicate(const std::string& name, int n, const std::string& params) {
    if (name == "disj" || name == "or") return predicate_disjointness(n);
    if (name == "and") return predicate_threshold(n, n);
    if (name == "parity") return predicate_parity(n);
    if (name == "maj") return predicate_majority(n);
    if (name == "thr") {
        if (params.empty()) throw std::invalid_argument("catalog: thr needs k parameter");
        return predicate_threshold(n, std::stoi(params));
    }
    if (name == "const") return predicate_constant(n, params == "-1" ? -1 : 1);
    throw std::invalid_argument("catalog: unknown predicate \"" + name + "\"");
}

// --- decision trees ---------------------------------------------------------

int DecisionTree::eval(uint32_t x) const {
    const DecisionTree* node = this;
    while (node->var != 0) node = bit_of(x, node->var) ? node->one.get() : node->zero.get();
    return node->leaf;
}

int DecisionTree::depth() const {
    if (var == 0) return 0;
    return 1 + std::max(zero->depth(), one->depth());
}

int DecisionTree::path_length(uint32_t x) const {
    int len = 0;
    const DecisionTree* node = this;
    while (node->var != 0) {
        ++len;
        node = bit_of(x, node->var) ? node->one.get() : node->zero.get();
    }
    return len;
}

namespace {

// Restrictions keyed by (assigned mask, assigned values); values bits only
// meaningful inside the mask.
struct TreeSearch {
    const BooleanFunction& f;
    int t;
    // memo: depth of the best tree for a restriction, -1 = unknown;
    // flat-indexed by (assigned mask, values on it)
    std::vector<int8_t> memo;

    explicit TreeSearch(const BooleanFunction& fn) : f(fn), t(fn.arity()) {
        if (t <= kExactTreeArity) memo.assign(1ull << (2 * t), -1);
    }

    uint32_t key(uint32_t assigned, uint32_t values) const {
        return (assigned << t) | (values & assigned);
    }

    // Is f constant on the subcube? Returns 0 if not, else the constant.
    int constant_on(uint32_t assigned, uint32_t values) const {
        int c = 0;
        uint32_t free_mask = ((1u << t) - 1) & ~assigned;
        // iterate over subsets of free_mask
        uint32_t sub = 0;
        for (;;) {
            int v = f((values & assigned) | sub);
            if (c == 0) c = v;
            else if (c != v) return 0;
            if (sub == free_mask) break;
            sub = (sub - free_mask) & free_mask;
        }
        return c;
    }

    int best_depth(uint32_t assigned, uint32_t values) {
        int8_t& slot = memo[key(assigned, values)];
        if (slot >= 0) return slot;
        int result;
        if (constant_on(assigned, values) != 0) {
            result = 0;
        } else {
            result = t + 1;
            for (int i = 1; i <= t; ++i) {
                uint32_t b = 1u << (i - 1);
                if (assigned & b) continue;
                int d0 = best_depth(assigned | b, values);
                int d1 = best_depth(assigned | b, values | b);
                result = std::min(result, 1 + std::max(d0, d1));
            }
        }
        slot = static_cast<int8_t>(result);
        return result;
    }

    std::unique_ptr<DecisionTree> build(uint32_t assigned, uint32_t values) {
        auto node = std::make_unique<DecisionTree>();
        int c = constant_on(assigned, values);
        if (c != 0) {
            node->leaf = static_cast<int8_t>(c);
            return node;
        }
        int want = best_depth(assigned, values);
        for (int i = 1; i <= t; ++i) {
            uint32_t b = 1u << (i - 1);
            if (assigned & b) continue;
            int d0 = best_depth(assigned | b, values);
            int d1 = best_depth(assigned | b, values | b);
            if (1 + std::max(d0, d1) == want) {
                node->var = i;
                node->zero = build(assigned | b, values);
                node->one = build(assigned | b, values | b);
                return node;
            }
        }
        throw std::logic_error("min_depth_tree: search inconsistency");
    }

    // Greedy fallback: query the lowest variable on which the restricted
    // function still depends.
    std::unique_ptr<DecisionTree> greedy(uint32_t assigned, uint32_t values) {
        auto node = std::make_unique<DecisionTree>();
        int c = constant_on(assigned, values);
        if (c != 0) {
            node->leaf = static_cast<int8_t>(c);
            return node;
        }
        for (int i = 1; i <= t; ++i) {
            uint32_t b = 1u << (i - 1);
            if (assigned & b) continue;
            node->var = i;
            node->zero = greedy(assigned | b, values);
            node->one = greedy(assigned | b, values | b);
            return node;
        }
        throw std::logic_error("min_depth_tree: greedy inconsistency");
    }
};

}  // namespace

MinDepthResult min_depth_tree(const BooleanFunction& f) {
    TreeSearch search(f);
    MinDepthResult out;
    if (f.arity() <= kExactTreeArity) {
        out.tree = search.build(0, 0);
        out.optimal = true;
    } else {
        out.tree = search.greedy(0, 0);
        out.optimal = false;
    }
    return out;
}

int decision_tree_depth(const BooleanFunction& f) {
    return min_depth_tree(f).tree->depth();
}

}  // namespace patmat
