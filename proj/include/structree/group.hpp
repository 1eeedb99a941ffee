#pragma once

#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "structree/errors.hpp"

namespace structree {

using Letter = int;
using Word = std::vector<Letter>;

// Finite alphabet with a partial involution (formal inverses).
struct Alphabet {
    std::vector<std::string> names;
    std::vector<Letter> inverse; // -1 when the letter has no declared inverse
    std::unordered_map<std::string, Letter> index;

    Letter add(const std::string& name);
    Letter find(const std::string& name) const; // -1 when absent
    Letter require(const std::string& name) const;
    void pair_inverses(Letter a, Letter b);
    int size() const { return static_cast<int>(names.size()); }
    const std::string& name(Letter a) const { return names[a]; }
};

// Canonical form of a group element: a reduced word plus a coset letter.
// coset == -1 encodes the trivial coset (printed as "1").
struct NormalForm {
    Word free_part;
    Letter coset = -1;

    bool is_identity() const { return free_part.empty() && coset == -1; }
    bool operator==(const NormalForm& o) const {
        return coset == o.coset && free_part == o.free_part;
    }
    bool operator!=(const NormalForm& o) const { return !(*this == o); }
};

struct BallElement {
    NormalForm element;
    std::string name;
    int distance = 0;
};

// Rewrite data for a group with a finite-index free subgroup: free letters X^±,
// a transversal R containing the identity letter, and a total rule table
// (state in R, input letter) -> (word over X^±, next state).
struct VirtuallyFreeData {
    std::vector<Letter> free_letters; // X^±, closed under involution
    std::vector<Letter> transversal;  // R; transversal[0] is the identity letter
    std::map<std::pair<Letter, Letter>, std::pair<Word, Letter>> rules;
};

class GroupOracle {
public:
    virtual ~GroupOracle() = default;

    const Alphabet& alphabet() const { return alphabet_; }

    NormalForm normal_form(const Word& w) const;
    NormalForm normal_form(const std::vector<std::string>& letters) const;
    bool is_identity(const Word& w) const { return normal_form(w).is_identity(); }
    NormalForm multiply(const NormalForm& a, const NormalForm& b) const;
    NormalForm inverse(const NormalForm& a) const;

    Word word_of(const NormalForm& nf) const;
    std::string name_of(const NormalForm& nf) const;
    NormalForm identity() const { return NormalForm{}; }

    // Letters representing the identity element (e.g. the transversal letter "1").
    bool letter_is_identity(Letter a) const;

    // All distinct elements at word distance <= radius over the given generators,
    // in canonical (distance, name) order.
    std::vector<BallElement> enumerate_ball(const std::vector<Letter>& generators,
                                            int radius) const;

    // Generating letters for Cayley graphs: the alphabet minus identity letters.
    std::vector<Letter> default_generators() const;

    // Quasi-isometric section support: the section word is word_of(normal_form).
    virtual bool has_section() const = 0;
    // Upper bound for d(sigma(g), sigma(ga)); 0 when no section is available.
    virtual int section_jump_bound() const = 0;

    virtual std::string backend_name() const = 0;

protected:
    // Core reduction; input letters already validated.
    virtual NormalForm reduce(const Word& w) const = 0;

    void finalize_letter_inverses(int search_depth = 6);

    Alphabet alphabet_;
    std::vector<Word> letter_inverse_; // per letter, a canonical word for its inverse
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

// Free group over base letters; inverses are created as "<x>^-1".
OraclePtr make_free_group(const std::vector<std::string>& base_letters);

// Finite group from an explicit multiplication table. elements[0] must be "1".
// table[i][j] = index of elements[i]*elements[j]. Group axioms are validated.
OraclePtr make_finite_group(const std::vector<std::string>& elements,
                            const std::vector<std::vector<int>>& table);

// Virtually free group from rewrite data over an explicit alphabet.
OraclePtr make_virtually_free_group(Alphabet alphabet, VirtuallyFreeData data);

// Free abelian group of the given rank with letters x1,...  (rank 2 gives x, y).
OraclePtr make_free_abelian_group(int rank);

// Free product with alternating-syllable normal forms. Component alphabets must
// not share non-identity letter names.
OraclePtr make_free_product(std::vector<OraclePtr> components);

// Fixture oracles used across tests and the CLI.
OraclePtr oracle_f2();     // free group on a, b
OraclePtr oracle_dinf();   // Z >< Z/2 (infinite dihedral), X = {a}, R = {1, t}
OraclePtr oracle_pgl();    // Z/2 * Z/3
OraclePtr oracle_zz2();    // (Z x Z/2) * Z/2
OraclePtr oracle_gridz2(); // (Z x Z) * Z/2

} // namespace structree
