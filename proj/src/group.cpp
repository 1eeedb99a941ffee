#include "structree/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace structree {

Letter Alphabet::add(const std::string& name) {
    if (index.count(name))
        fail(error_kind::input, "duplicate letter name: " + name);
    Letter id = static_cast<Letter>(names.size());
    names.push_back(name);
    inverse.push_back(-1);
    index.emplace(name, id);
    return id;
}

Letter Alphabet::find(const std::string& name) const {
    auto it = index.find(name);
    return it == index.end() ? -1 : it->second;
}

Letter Alphabet::require(const std::string& name) const {
    Letter a = find(name);
    if (a < 0) fail(error_kind::input, "unknown letter: " + name);
    return a;
}

void Alphabet::pair_inverses(Letter a, Letter b) {
    if (a == b) fail(error_kind::data, "letter involution must be fixed-point free: " + names[a]);
    inverse[a] = b;
    inverse[b] = a;
}

NormalForm GroupOracle::normal_form(const Word& w) const {
    for (Letter a : w)
        if (a < 0 || a >= alphabet_.size())
            fail(error_kind::input, "letter id out of range");
    return reduce(w);
}

NormalForm GroupOracle::normal_form(const std::vector<std::string>& letters) const {
    Word w;
    w.reserve(letters.size());
    for (const auto& s : letters) w.push_back(alphabet_.require(s));
    return reduce(w);
}

NormalForm GroupOracle::multiply(const NormalForm& a, const NormalForm& b) const {
    Word w = word_of(a);
    Word wb = word_of(b);
    w.insert(w.end(), wb.begin(), wb.end());
    return reduce(w);
}

NormalForm GroupOracle::inverse(const NormalForm& a) const {
    Word w = word_of(a);
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        const Word& inv = letter_inverse_[*it];
        out.insert(out.end(), inv.begin(), inv.end());
    }
    return reduce(out);
}

Word GroupOracle::word_of(const NormalForm& nf) const {
    Word w = nf.free_part;
    if (nf.coset != -1) w.push_back(nf.coset);
    return w;
}

std::string GroupOracle::name_of(const NormalForm& nf) const {
    Word w = word_of(nf);
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += alphabet_.name(w[i]);
    }
    return out;
}

bool GroupOracle::letter_is_identity(Letter a) const {
    return reduce(Word{a}).is_identity();
}

std::vector<Letter> GroupOracle::default_generators() const {
    std::vector<Letter> gens;
    for (Letter a = 0; a < alphabet_.size(); ++a)
        if (!letter_is_identity(a)) gens.push_back(a);
    return gens;
}

std::vector<BallElement> GroupOracle::enumerate_ball(const std::vector<Letter>& generators,
                                                     int radius) const {
    for (Letter a : generators)
        if (a < 0 || a >= alphabet_.size())
            fail(error_kind::input, "generator letter id out of range");
    std::unordered_map<std::string, int> seen;
    std::vector<BallElement> out;
    std::deque<int> queue;
    NormalForm id = identity();
    out.push_back({id, name_of(id), 0});
    seen.emplace("1", 0);
    queue.push_back(0);
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (out[cur].distance == radius) continue;
        for (Letter a : generators) {
            Word w = word_of(out[cur].element);
            w.push_back(a);
            NormalForm next = reduce(w);
            std::string name = name_of(next);
            if (seen.count(name)) continue;
            seen.emplace(name, static_cast<int>(out.size()));
            out.push_back({next, name, out[cur].distance + 1});
            queue.push_back(static_cast<int>(out.size()) - 1);
        }
    }
    std::sort(out.begin(), out.end(), [](const BallElement& x, const BallElement& y) {
        return std::tie(x.distance, x.name) < std::tie(y.distance, y.name);
    });
    return out;
}

void GroupOracle::finalize_letter_inverses(int search_depth) {
    letter_inverse_.assign(alphabet_.size(), Word{});
    for (Letter a = 0; a < alphabet_.size(); ++a) {
        if (reduce(Word{a}).is_identity()) {
            letter_inverse_[a] = {};
            continue;
        }
        if (alphabet_.inverse[a] != -1) {
            letter_inverse_[a] = {alphabet_.inverse[a]};
            continue;
        }
        // Breadth-first search over short words for a right inverse.
        bool found = false;
        std::set<std::string> visited;
        std::deque<Word> queue;
        queue.push_back({});
        while (!queue.empty() && !found) {
            Word w = queue.front();
            queue.pop_front();
            Word probe{a};
            probe.insert(probe.end(), w.begin(), w.end());
            if (!w.empty() && reduce(probe).is_identity()) {
                letter_inverse_[a] = word_of(reduce(w));
                found = true;
                break;
            }
            if (static_cast<int>(w.size()) >= search_depth) continue;
            for (Letter b = 0; b < alphabet_.size(); ++b) {
                Word next = w;
                next.push_back(b);
                std::string key = name_of(reduce(next));
                if (!visited.insert(key).second) continue;
                queue.push_back(next);
            }
        }
        if (!found)
            fail(error_kind::data,
                 "no short inverse found for letter " + alphabet_.name(a));
    }
}

namespace {

void append_reduced(Word& stack, Letter a, const Alphabet& alphabet) {
    if (!stack.empty() && alphabet.inverse[stack.back()] == a)
        stack.pop_back();
    else
        stack.push_back(a);
}

class FreeBackend final : public GroupOracle {
public:
    explicit FreeBackend(const std::vector<std::string>& base_letters) {
        for (const auto& base : base_letters) {
            Letter x = alphabet_.add(base);
            Letter xi = alphabet_.add(base + "^-1");
            alphabet_.pair_inverses(x, xi);
        }
        finalize_letter_inverses();
    }

    bool has_section() const override { return true; }
    int section_jump_bound() const override { return 2; }
    std::string backend_name() const override { return "free"; }

protected:
    NormalForm reduce(const Word& w) const override {
        NormalForm nf;
        for (Letter a : w) append_reduced(nf.free_part, a, alphabet_);
        return nf;
    }
};

class FiniteBackend final : public GroupOracle {
public:
    FiniteBackend(const std::vector<std::string>& elements,
                  const std::vector<std::vector<int>>& table)
        : table_(table) {
        int n = static_cast<int>(elements.size());
        if (n == 0 || elements[0] != "1")
            fail(error_kind::input, "finite group: first element must be named 1");
        if (static_cast<int>(table.size()) != n)
            fail(error_kind::input, "finite group: table has wrong number of rows");
        for (const auto& row : table) {
            if (static_cast<int>(row.size()) != n)
                fail(error_kind::input, "finite group: table row has wrong length");
            for (int v : row)
                if (v < 0 || v >= n)
                    fail(error_kind::input, "finite group: table entry out of range");
        }
        for (const auto& name : elements) alphabet_.add(name);
        for (int i = 0; i < n; ++i)
            if (table_[0][i] != i || table_[i][0] != i)
                fail(error_kind::data, "finite group: 1 is not an identity");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    if (table_[table_[i][j]][k] != table_[i][table_[j][k]])
                        fail(error_kind::data, "finite group: table is not associative");
        for (int i = 0; i < n; ++i) {
            bool has_inverse = false;
            for (int j = 0; j < n; ++j) has_inverse |= table_[i][j] == 0;
            if (!has_inverse)
                fail(error_kind::data, "finite group: element without inverse: " + elements[i]);
        }
        finalize_letter_inverses();
    }

    bool has_section() const override { return true; }
    int section_jump_bound() const override { return 2; }
    std::string backend_name() const override { return "finite"; }

protected:
    NormalForm reduce(const Word& w) const override {
        int cur = 0;
        for (Letter a : w) cur = table_[cur][a];
        NormalForm nf;
        if (cur != 0) nf.coset = cur;
        return nf;
    }

private:
    std::vector<std::vector<int>> table_;
};

class VirtuallyFreeBackend final : public GroupOracle {
public:
    VirtuallyFreeBackend(Alphabet alphabet, VirtuallyFreeData data)
        : data_(std::move(data)) {
        alphabet_ = std::move(alphabet);
        if (data_.transversal.empty() ||
            alphabet_.name(data_.transversal[0]) != "1")
            fail(error_kind::input, "virtually free data: transversal must start with 1");
        for (Letter x : data_.free_letters)
            if (alphabet_.inverse[x] == -1)
                fail(error_kind::data,
                     "free letter without inverse: " + alphabet_.name(x));
        max_rule_length_ = 0;
        for (Letter s : data_.transversal) {
            for (Letter b = 0; b < alphabet_.size(); ++b) {
                auto it = data_.rules.find({s, b});
                if (it == data_.rules.end())
                    fail(error_kind::data, "rule table missing entry (" +
                                               alphabet_.name(s) + ", " +
                                               alphabet_.name(b) + ")");
                const Word& x = it->second.first;
                for (std::size_t i = 0; i + 1 < x.size(); ++i)
                    if (alphabet_.inverse[x[i]] == x[i + 1])
                        fail(error_kind::data, "rule word is not freely reduced");
                max_rule_length_ =
                    std::max(max_rule_length_, static_cast<int>(x.size()));
            }
        }
        finalize_letter_inverses();
    }

    bool has_section() const override { return true; }
    int section_jump_bound() const override { return 2 * max_rule_length_ + 2; }
    std::string backend_name() const override { return "virtually_free"; }

protected:
    // Single pass of the pushdown machine: stack of free letters, state in R.
    NormalForm reduce(const Word& w) const override {
        Word stack;
        Letter state = data_.transversal[0];
        for (Letter b : w) {
            auto it = data_.rules.find({state, b});
            if (it == data_.rules.end())
                fail(error_kind::data, "rule table missing entry for state " +
                                           alphabet_.name(state) + ", letter " +
                                           alphabet_.name(b));
            for (Letter x : it->second.first) append_reduced(stack, x, alphabet_);
            state = it->second.second;
        }
        NormalForm nf;
        nf.free_part = std::move(stack);
        if (state != data_.transversal[0]) nf.coset = state;
        return nf;
    }

private:
    VirtuallyFreeData data_;
    int max_rule_length_ = 0;
};

class FreeAbelianBackend final : public GroupOracle {
public:
    explicit FreeAbelianBackend(int rank) : rank_(rank) {
        if (rank < 1 || rank > 3)
            fail(error_kind::input, "free abelian rank must be 1..3");
        static const char* names[3] = {"x", "y", "z"};
        for (int i = 0; i < rank; ++i) {
            Letter a = alphabet_.add(names[i]);
            Letter ai = alphabet_.add(std::string(names[i]) + "^-1");
            alphabet_.pair_inverses(a, ai);
        }
        finalize_letter_inverses();
    }

    bool has_section() const override { return false; }
    int section_jump_bound() const override { return 0; }
    std::string backend_name() const override { return "free_abelian"; }

protected:
    NormalForm reduce(const Word& w) const override {
        std::vector<long> exps(rank_, 0);
        for (Letter a : w) {
            int base = a / 2;
            exps[base] += (a % 2 == 0) ? 1 : -1;
        }
        NormalForm nf;
        for (int i = 0; i < rank_; ++i) {
            Letter l = static_cast<Letter>(exps[i] >= 0 ? 2 * i : 2 * i + 1);
            for (long j = 0; j < std::abs(exps[i]); ++j) nf.free_part.push_back(l);
        }
        return nf;
    }

private:
    int rank_;
};

class FreeProductBackend final : public GroupOracle {
public:
    explicit FreeProductBackend(std::vector<OraclePtr> components)
        : components_(std::move(components)) {
        if (components_.size() < 2)
            fail(error_kind::input, "free product needs at least two components");
        comp_to_prod_.resize(components_.size());
        for (std::size_t ci = 0; ci < components_.size(); ++ci) {
            const Alphabet& ca = components_[ci]->alphabet();
            comp_to_prod_[ci].assign(ca.size(), -1);
            for (Letter a = 0; a < ca.size(); ++a) {
                if (components_[ci]->letter_is_identity(a)) continue;
                Letter p = alphabet_.add(ca.name(a));
                comp_to_prod_[ci][a] = p;
                letter_source_.push_back({static_cast<int>(ci), a});
            }
            for (Letter a = 0; a < ca.size(); ++a) {
                Letter ai = ca.inverse[a];
                if (ai == -1 || ai < a) continue;
                Letter pa = comp_to_prod_[ci][a], pai = comp_to_prod_[ci][ai];
                if (pa != -1 && pai != -1) alphabet_.pair_inverses(pa, pai);
            }
        }
        finalize_letter_inverses();
    }

    bool has_section() const override {
        for (const auto& c : components_)
            if (!c->has_section()) return false;
        return true;
    }
    int section_jump_bound() const override {
        int b = 0;
        for (const auto& c : components_) b = std::max(b, c->section_jump_bound());
        return b + 2;
    }
    std::string backend_name() const override { return "free_product"; }

protected:
    // Alternating-syllable normal form: consecutive syllables lie in distinct
    // components and none reduces to the identity.
    NormalForm reduce(const Word& w) const override {
        struct Syllable {
            int comp;
            NormalForm nf;
        };
        std::vector<Syllable> stack;
        for (Letter p : w) {
            auto [ci, cl] = letter_source_[p];
            NormalForm letter_nf = components_[ci]->normal_form(Word{cl});
            if (!stack.empty() && stack.back().comp == ci) {
                NormalForm merged = components_[ci]->multiply(stack.back().nf, letter_nf);
                if (merged.is_identity())
                    stack.pop_back();
                else
                    stack.back().nf = merged;
            } else {
                stack.push_back({ci, letter_nf});
            }
        }
        NormalForm nf;
        for (const auto& syl : stack) {
            Word cw = components_[syl.comp]->word_of(syl.nf);
            for (Letter cl : cw) nf.free_part.push_back(comp_to_prod_[syl.comp][cl]);
        }
        return nf;
    }

private:
    std::vector<OraclePtr> components_;
    std::vector<std::vector<Letter>> comp_to_prod_;
    std::vector<std::pair<int, Letter>> letter_source_;
};

OraclePtr make_cyclic_group(int order, const std::string& base) {
    std::vector<std::string> elements{"1"};
    for (int i = 1; i < order; ++i) {
        if (i == 1)
            elements.push_back(base);
        else if (order - i == 1)
            elements.push_back(base + "^-1");
        else
            elements.push_back(base + "^" + std::to_string(i));
    }
    std::vector<std::vector<int>> table(order, std::vector<int>(order));
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) table[i][j] = (i + j) % order;
    return make_finite_group(elements, table);
}

// Z x Z/2 with a generating Z and a central involution s.
OraclePtr make_z_cross_z2() {
    Alphabet alpha;
    Letter a = alpha.add("a");
    Letter ai = alpha.add("a^-1");
    alpha.pair_inverses(a, ai);
    Letter one = alpha.add("1");
    Letter s = alpha.add("s");
    VirtuallyFreeData data;
    data.free_letters = {a, ai};
    data.transversal = {one, s};
    auto rule = [&](Letter st, Letter b, Word x, Letter next) {
        data.rules[{st, b}] = {std::move(x), next};
    };
    rule(one, a, {a}, one);
    rule(one, ai, {ai}, one);
    rule(one, one, {}, one);
    rule(one, s, {}, s);
    rule(s, a, {a}, s);
    rule(s, ai, {ai}, s);
    rule(s, one, {}, s);
    rule(s, s, {}, one);
    return make_virtually_free_group(std::move(alpha), std::move(data));
}

} // namespace

OraclePtr make_free_group(const std::vector<std::string>& base_letters) {
    return std::make_shared<FreeBackend>(base_letters);
}

OraclePtr make_finite_group(const std::vector<std::string>& elements,
                            const std::vector<std::vector<int>>& table) {
    return std::make_shared<FiniteBackend>(elements, table);
}

OraclePtr make_virtually_free_group(Alphabet alphabet, VirtuallyFreeData data) {
    return std::make_shared<VirtuallyFreeBackend>(std::move(alphabet), std::move(data));
}

OraclePtr make_free_abelian_group(int rank) {
    return std::make_shared<FreeAbelianBackend>(rank);
}

OraclePtr make_free_product(std::vector<OraclePtr> components) {
    return std::make_shared<FreeProductBackend>(std::move(components));
}

OraclePtr oracle_f2() { return make_free_group({"a", "b"}); }

OraclePtr oracle_dinf() {
    Alphabet alpha;
    Letter a = alpha.add("a");
    Letter ai = alpha.add("a^-1");
    alpha.pair_inverses(a, ai);
    Letter one = alpha.add("1");
    Letter t = alpha.add("t");
    VirtuallyFreeData data;
    data.free_letters = {a, ai};
    data.transversal = {one, t};
    auto rule = [&](Letter st, Letter b, Word x, Letter next) {
        data.rules[{st, b}] = {std::move(x), next};
    };
    rule(one, a, {a}, one);
    rule(one, ai, {ai}, one);
    rule(one, one, {}, one);
    rule(one, t, {}, t);
    rule(t, a, {ai}, t); // ta = a^-1 t
    rule(t, ai, {a}, t);
    rule(t, one, {}, t);
    rule(t, t, {}, one);
    return make_virtually_free_group(std::move(alpha), std::move(data));
}

OraclePtr oracle_pgl() {
    return make_free_product({make_cyclic_group(2, "a"), make_cyclic_group(3, "b")});
}

OraclePtr oracle_zz2() {
    return make_free_product({make_z_cross_z2(), make_cyclic_group(2, "c")});
}

OraclePtr oracle_gridz2() {
    return make_free_product({make_free_abelian_group(2), make_cyclic_group(2, "c")});
}

} // namespace structree
