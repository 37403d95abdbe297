#include "switchhom/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace switchhom {

namespace {

void check_degree(int degree) {
    if (degree < 1)
        throw std::invalid_argument("permutation degree must be at least 1");
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    check_degree(static_cast<int>(image_.size()));
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
        if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
            throw std::invalid_argument("image sequence is not a permutation");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int degree) {
    check_degree(degree);
    std::vector<int> image(degree);
    std::iota(image.begin(), image.end(), 1);
    return Permutation(std::move(image));
}

Permutation Permutation::from_cycles(std::string_view text, int degree) {
    check_degree(degree);
    std::vector<int> image(degree);
    std::iota(image.begin(), image.end(), 1);

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip_space();
    bool saw_cycle = false;
    while (pos < text.size()) {
        if (text[pos] != '(')
            throw std::invalid_argument("expected '(' in cycle notation: " + std::string(text));
        ++pos;
        std::vector<int> cycle;
        skip_space();
        while (pos < text.size() && text[pos] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[pos])))
                throw std::invalid_argument("expected point in cycle notation: " + std::string(text));
            int point = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                point = point * 10 + (text[pos] - '0');
                ++pos;
            }
            if (point < 1 || point > degree)
                throw std::invalid_argument("cycle point out of range: " + std::to_string(point));
            cycle.push_back(point);
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                skip_space();
            }
        }
        if (pos >= text.size())
            throw std::invalid_argument("unterminated cycle: " + std::string(text));
        ++pos;  // ')'
        saw_cycle = true;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            int from = cycle[i];
            int to = cycle[(i + 1) % cycle.size()];
            if (image[from - 1] != from)
                throw std::invalid_argument("cycles are not disjoint: " + std::string(text));
            image[from - 1] = to;
        }
        skip_space();
    }
    if (!saw_cycle)
        throw std::invalid_argument("empty cycle notation: " + std::string(text));
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i)
        inv[image_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != static_cast<int>(i) + 1) return false;
    return true;
}

int Permutation::order() const {
    int result = 1;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i]) continue;
        int length = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<std::size_t>(image_[j] - 1);
            ++length;
        }
        result = std::lcm(result, length);
    }
    return result;
}

std::string Permutation::to_cycles() const {
    std::ostringstream out;
    std::vector<bool> seen(image_.size(), false);
    bool any = false;
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (seen[i] || image_[i] == static_cast<int>(i) + 1) {
            seen[i] = true;
            continue;
        }
        out << '(';
        std::size_t j = i;
        bool first = true;
        while (!seen[j]) {
            seen[j] = true;
            if (!first) out << ' ';
            out << j + 1;
            first = false;
            j = static_cast<std::size_t>(image_[j] - 1);
        }
        out << ')';
        any = true;
    }
    if (!any) return "()";
    return out.str();
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("cannot compose permutations of different degrees");
    std::vector<int> image(a.image_.size());
    for (std::size_t i = 0; i < image.size(); ++i)
        image[i] = a.image_[static_cast<std::size_t>(b.image_[i] - 1)];
    return Permutation(std::move(image));
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.image_ <=> b.image_;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
    return a * b * a.inverse() * b.inverse();
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::vector<Permutation> elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(elements)) {
    std::vector<bool> reached(static_cast<std::size_t>(degree_), false);
    reached[0] = true;
    for (const Permutation& p : elements_) reached[static_cast<std::size_t>(p.apply(1) - 1)] = true;
    is_transitive_ = std::all_of(reached.begin(), reached.end(), [](bool b) { return b; });
    is_abelian_ = true;
    for (std::size_t i = 0; i < generators_.size() && is_abelian_; ++i)
        for (std::size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i] * generators_[j] != generators_[j] * generators_[i]) {
                is_abelian_ = false;
                break;
            }
}

PermGroup PermGroup::generate(std::vector<Permutation> generators, int degree, std::size_t element_cap) {
    check_degree(degree);
    for (const Permutation& g : generators)
        if (g.degree() != degree)
            throw std::invalid_argument("generator degree does not match group degree");

    std::set<Permutation> closed;
    std::vector<Permutation> frontier;
    closed.insert(Permutation::identity(degree));
    frontier.push_back(Permutation::identity(degree));
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const Permutation& p : frontier) {
            for (const Permutation& g : generators) {
                Permutation q = g * p;
                if (closed.insert(q).second) {
                    if (closed.size() > element_cap)
                        throw std::runtime_error("group closure exceeds element cap of " +
                                                 std::to_string(element_cap));
                    next.push_back(std::move(q));
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Permutation> elements(closed.begin(), closed.end());
    return PermGroup(degree, std::move(generators), std::move(elements));
}

bool PermGroup::contains(const Permutation& p) const {
    return p.degree() == degree_ && std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Permutation& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p)
        throw std::out_of_range("permutation is not a group element: " + p.to_cycles());
    return static_cast<std::size_t>(it - elements_.begin());
}

GroupProperties PermGroup::properties() const {
    return GroupProperties{order(), is_transitive(), is_abelian(), is_regular()};
}

PermGroup commutator_subgroup(const PermGroup& g) {
    std::vector<Permutation> gens;
    std::set<Permutation> seen;
    for (const Permutation& a : g.elements())
        for (const Permutation& b : g.elements()) {
            Permutation c = commutator(a, b);
            if (!c.is_identity() && seen.insert(c).second) gens.push_back(std::move(c));
        }
    return PermGroup::generate(std::move(gens), g.degree());
}

BlockSystem block_system(const PermGroup& g) {
    if (!g.is_transitive())
        throw std::invalid_argument("block system requires a transitive group");
    PermGroup derived = commutator_subgroup(g);
    int m = g.degree();
    BlockSystem result;
    result.degree = m;
    result.label_of.assign(static_cast<std::size_t>(m), 0);
    for (int c = 1; c <= m; ++c) {
        if (result.label_of[static_cast<std::size_t>(c - 1)] != 0) continue;
        std::set<int> orbit;
        for (const Permutation& p : derived.elements()) orbit.insert(p.apply(c));
        int label = static_cast<int>(result.blocks.size()) + 1;
        result.blocks.emplace_back(orbit.begin(), orbit.end());
        for (int x : result.blocks.back()) result.label_of[static_cast<std::size_t>(x - 1)] = label;
    }
    return result;
}

Permutation Abelianization::project(const Permutation& p) const {
    return quotient.element(static_cast<std::size_t>(
        projection[source.index_of(p)]));
}

Permutation Abelianization::representative_of(const Permutation& quotient_element) const {
    return source.element(static_cast<std::size_t>(
        representative[quotient.index_of(quotient_element)]));
}

Abelianization abelianization(const PermGroup& g) {
    BlockSystem blocks = block_system(g);
    int mprime = blocks.block_count();

    auto induced = [&](const Permutation& p) {
        std::vector<int> image(static_cast<std::size_t>(mprime));
        for (int label = 1; label <= mprime; ++label) {
            int colour = blocks.block(label).front();
            image[static_cast<std::size_t>(label - 1)] = blocks.label(p.apply(colour));
        }
        return Permutation(std::move(image));
    };

    std::vector<Permutation> quotient_gens;
    for (const Permutation& gen : g.generators()) quotient_gens.push_back(induced(gen));
    PermGroup quotient = PermGroup::generate(std::move(quotient_gens), mprime);

    std::vector<int> projection(g.order());
    std::vector<int> representative(quotient.order(), -1);
    for (std::size_t i = 0; i < g.order(); ++i) {
        std::size_t q = quotient.index_of(induced(g.element(i)));
        projection[i] = static_cast<int>(q);
        if (representative[q] < 0) representative[q] = static_cast<int>(i);
    }
    return Abelianization{g,
                          std::move(blocks),
                          std::move(quotient),
                          std::move(projection),
                          std::move(representative)};
}

PermGroup parse_group(const std::string& text, std::size_t element_cap) {
    std::istringstream in(text);
    std::string line;
    int degree = -1;
    std::vector<Permutation> generators;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string trimmed = line.substr(begin, end - begin + 1);
        if (degree < 0) {
            std::istringstream header(trimmed);
            std::string keyword;
            header >> keyword >> degree;
            if (keyword != "group" || header.fail() || degree < 1)
                throw std::invalid_argument("group file must start with 'group <m>'");
            std::string rest;
            if (header >> rest)
                throw std::invalid_argument("unexpected text after group header: " + rest);
        } else {
            generators.push_back(Permutation::from_cycles(trimmed, degree));
        }
    }
    if (degree < 0)
        throw std::invalid_argument("group file is empty");
    return PermGroup::generate(std::move(generators), degree, element_cap);
}

std::string serialize_group(const PermGroup& g) {
    std::ostringstream out;
    out << "group " << g.degree() << '\n';
    for (const Permutation& gen : g.generators()) out << gen.to_cycles() << '\n';
    return out.str();
}

}  // namespace switchhom
