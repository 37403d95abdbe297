#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace switchhom {

// A permutation of the colour set {1..m}. Points are 1-based throughout;
// composition is right-to-left: (a*b)(i) = a(b(i)).
class Permutation {
public:
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int degree);

    // Parses disjoint-cycle notation with 1-based points, e.g. "(1 2 3)(4 5)".
    // Fixed points may be omitted; "()" is the identity.
    static Permutation from_cycles(std::string_view text, int degree);

    int degree() const { return static_cast<int>(image_.size()); }
    int apply(int point) const { return image_[point - 1]; }
    int operator()(int point) const { return apply(point); }

    Permutation inverse() const;
    bool is_identity() const;
    int order() const;

    std::string to_cycles() const;

    const std::vector<int>& image() const { return image_; }

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b);

private:
    std::vector<int> image_;  // image_[i-1] = pi(i)
};

// [a,b] = a b a^-1 b^-1
Permutation commutator(const Permutation& a, const Permutation& b);

struct GroupProperties {
    std::size_t order;
    bool is_transitive;
    bool is_abelian;
    bool is_regular;
};

// A finite permutation group on {1..m}, stored as its full element closure
// in canonical order (lexicographic by image sequence; identity is first).
class PermGroup {
public:
    static constexpr std::size_t default_element_cap = 100000;

    // Closure of the generating set by breadth-first multiplication.
    static PermGroup generate(std::vector<Permutation> generators, int degree,
                              std::size_t element_cap = default_element_cap);

    int degree() const { return degree_; }
    std::size_t order() const { return elements_.size(); }
    const std::vector<Permutation>& elements() const { return elements_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const Permutation& element(std::size_t index) const { return elements_[index]; }
    Permutation identity() const { return Permutation::identity(degree_); }

    bool contains(const Permutation& p) const;
    // Index into elements() in canonical order; throws if absent.
    std::size_t index_of(const Permutation& p) const;

    bool is_transitive() const { return is_transitive_; }
    bool is_abelian() const { return is_abelian_; }
    bool is_regular() const { return is_transitive_ && order() == static_cast<std::size_t>(degree_); }

    GroupProperties properties() const;

private:
    PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements);

    int degree_;
    std::vector<Permutation> generators_;
    std::vector<Permutation> elements_;  // sorted, identity first
    bool is_transitive_ = false;
    bool is_abelian_ = false;
};

// Subgroup generated by all commutators [a,b] over element pairs of g.
PermGroup commutator_subgroup(const PermGroup& g);

// Orbits of the commutator subgroup on {1..m}. Blocks are listed in
// increasing order of their minimum colour and renumbered 1..m'.
struct BlockSystem {
    int degree = 0;                        // original m
    std::vector<std::vector<int>> blocks;  // each sorted ascending
    std::vector<int> label_of;             // colour -> block label (1-based)

    int block_count() const { return static_cast<int>(blocks.size()); }
    int label(int colour) const { return label_of[colour - 1]; }
    const std::vector<int>& block(int label) const { return blocks[label - 1]; }
    bool same_block(int c1, int c2) const { return label(c1) == label(c2); }
};

// Requires g transitive.
BlockSystem block_system(const PermGroup& g);

// The induced action of g on the block labels of its commutator subgroup,
// with duplicates removed: an Abelian transitive group of degree m'.
struct Abelianization {
    PermGroup source;
    BlockSystem blocks;
    PermGroup quotient;                  // degree m' = blocks.block_count()
    std::vector<int> projection;         // source element index -> quotient element index
    std::vector<int> representative;     // quotient element index -> source element index

    Permutation project(const Permutation& p) const;
    // First element of the source (canonical order) with the given block action.
    Permutation representative_of(const Permutation& quotient_element) const;
};

// Requires g transitive.
Abelianization abelianization(const PermGroup& g);

// Group file format: first line "group <m>", then one generator per
// non-comment line in cycle notation. '#' starts a comment line.
PermGroup parse_group(const std::string& text, std::size_t element_cap = PermGroup::default_element_cap);
std::string serialize_group(const PermGroup& g);

}  // namespace switchhom
