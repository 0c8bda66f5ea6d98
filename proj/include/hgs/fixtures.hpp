#pragma once

// The .hgx extension-descriptor format: JSON with exact rationals as strings.

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hgs/descent.hpp"
#include "hgs/errors.hpp"
#include "hgs/group.hpp"
#include "hgs/integral.hpp"
#include "hgs/lattice.hpp"
#include "hgs/number_field.hpp"
#include "hgs/perm_core.hpp"
#include "json.hpp"

namespace hgs {

using Json = nlohmann::ordered_json;

struct LabeledPermutation {
    std::string label;
    std::vector<std::uint32_t> images;
    friend bool operator==(const LabeledPermutation&, const LabeledPermutation&) = default;
};

/// A subgroup generator: either a word in the group's labels or an explicit permutation.
struct SubgroupGenerator {
    std::optional<std::string> word;
    std::optional<std::vector<std::uint32_t>> images;
    friend bool operator==(const SubgroupGenerator&, const SubgroupGenerator&) = default;
};

struct IdealSpec {
    std::string name;
    bool integral_basis = false;     // the ideal is O_L itself
    std::vector<QVector> generators;  // otherwise, E-coordinates of generators
    friend bool operator==(const IdealSpec&, const IdealSpec&) = default;
};

struct FixtureAssertions {
    std::optional<std::size_t> structures;
    std::optional<std::size_t> center_order;
    std::optional<std::vector<std::size_t>> normal_subgroup_orders;
    friend bool operator==(const FixtureAssertions&, const FixtureAssertions&) = default;
};

struct ExtensionDescriptor {
    std::string name;
    std::string description;
    std::size_t order = 0;
    std::vector<LabeledPermutation> generators;
    std::vector<std::string> relations;
    std::vector<SubgroupGenerator> subgroup;
    std::optional<FieldDescriptor> field;
    std::vector<QVector> integral_basis;  // E-coordinates
    std::vector<IdealSpec> ideals;
    FixtureAssertions assertions;

    friend bool operator==(const ExtensionDescriptor& a, const ExtensionDescriptor& b) {
        auto field_eq = [](const std::optional<FieldDescriptor>& x, const std::optional<FieldDescriptor>& y) {
            if (x.has_value() != y.has_value()) return false;
            if (!x) return true;
            if (x->minimal_polynomial != y->minimal_polynomial ||
                x->irreducible_asserted != y->irreducible_asserted ||
                x->automorphisms.size() != y->automorphisms.size())
                return false;
            for (std::size_t i = 0; i < x->automorphisms.size(); ++i)
                if (x->automorphisms[i].label != y->automorphisms[i].label ||
                    x->automorphisms[i].image != y->automorphisms[i].image)
                    return false;
            return true;
        };
        return a.name == b.name && a.description == b.description && a.order == b.order &&
               a.generators == b.generators && a.relations == b.relations && a.subgroup == b.subgroup &&
               field_eq(a.field, b.field) && a.integral_basis == b.integral_basis && a.ideals == b.ideals &&
               a.assertions == b.assertions;
    }
};

namespace detail {

inline std::string line_column(const std::string& text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

// Collects shape errors while reading a JSON tree.
class Reader {
public:
    std::vector<std::string> problems;

    const Json* member(const Json& obj, const std::string& key, const std::string& where, bool required = true) {
        if (!obj.is_object()) {
            problems.push_back(where + " must be an object");
            return nullptr;
        }
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) problems.push_back(where + "." + key + " is missing");
            return nullptr;
        }
        return &*it;
    }

    std::optional<std::string> string(const Json* j, const std::string& where) {
        if (!j) return std::nullopt;
        if (!j->is_string()) {
            problems.push_back(where + " must be a string");
            return std::nullopt;
        }
        return j->get<std::string>();
    }

    std::optional<long long> integer(const Json& j, const std::string& where) {
        if (!j.is_number_integer()) {
            problems.push_back(where + " must be an integer");
            return std::nullopt;
        }
        return j.get<long long>();
    }

    std::optional<Q> rational(const Json& j, const std::string& where) {
        if (j.is_number_integer()) return Q(Z(std::to_string(j.get<long long>())));
        if (!j.is_string()) {
            problems.push_back(where + " must be a rational string \"p/q\"");
            return std::nullopt;
        }
        try {
            return parse_rational(j.get<std::string>());
        } catch (const DomainError& e) {
            problems.push_back(where + ": " + e.what());
            return std::nullopt;
        }
    }

    std::optional<QVector> rationals(const Json& j, const std::string& where) {
        if (!j.is_array()) {
            problems.push_back(where + " must be an array");
            return std::nullopt;
        }
        QVector v;
        bool ok = true;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto q = rational(j[i], where + "[" + std::to_string(i) + "]");
            if (q)
                v.push_back(*q);
            else
                ok = false;
        }
        return ok ? std::optional<QVector>(std::move(v)) : std::nullopt;
    }

    std::optional<std::vector<std::uint32_t>> images(const Json& j, const std::string& where) {
        if (!j.is_array()) {
            problems.push_back(where + " must be an array of point images");
            return std::nullopt;
        }
        std::vector<std::uint32_t> v;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto x = integer(j[i], where + "[" + std::to_string(i) + "]");
            if (!x) return std::nullopt;
            if (*x < 0) {
                problems.push_back(where + "[" + std::to_string(i) + "] must be non-negative");
                return std::nullopt;
            }
            v.push_back(static_cast<std::uint32_t>(*x));
        }
        return v;
    }
};

}  // namespace detail

/// Reads the descriptor's structure; throws ValidationError listing every shape problem.
inline ExtensionDescriptor read_descriptor(const std::string& text) {
    Json root;
    try {
        root = Json::parse(text);
    } catch (const Json::parse_error& e) {
        const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
        throw ValidationError("syntax error at " + detail::line_column(text, at) + ": " + e.what());
    }
    detail::Reader rd;
    ExtensionDescriptor d;
    if (!root.is_object()) throw ValidationError("descriptor must be a JSON object");

    static const char* known[] = {"name", "description", "group", "subgroup", "field",
                                  "integral_basis", "ideals", "assertions"};
    for (const auto& [key, _] : root.items())
        if (std::find(std::begin(known), std::end(known), key) == std::end(known))
            rd.problems.push_back("unknown top-level key '" + key + "'");

    if (auto s = rd.string(rd.member(root, "name", "descriptor"), "name")) d.name = *s;
    if (auto s = rd.string(rd.member(root, "description", "descriptor", false), "description")) d.description = *s;

    if (const Json* g = rd.member(root, "group", "descriptor")) {
        if (const Json* o = rd.member(*g, "order", "group"))
            if (auto v = rd.integer(*o, "group.order")) d.order = static_cast<std::size_t>(*v);
        if (const Json* gens = rd.member(*g, "generators", "group")) {
            if (!gens->is_object() || gens->empty())
                rd.problems.push_back("group.generators must be a non-empty object of label: images");
            else
                for (const auto& [label, imgs] : gens->items())
                    if (auto v = rd.images(imgs, "group.generators." + label)) d.generators.push_back({label, *v});
        }
        if (const Json* rel = rd.member(*g, "relations", "group", false)) {
            if (!rel->is_array())
                rd.problems.push_back("group.relations must be an array of words");
            else
                for (std::size_t i = 0; i < rel->size(); ++i)
                    if (auto s = rd.string(&(*rel)[i], "group.relations[" + std::to_string(i) + "]"))
                        d.relations.push_back(*s);
        }
    }

    if (const Json* sg = rd.member(root, "subgroup", "descriptor")) {
        if (const Json* gens = rd.member(*sg, "generators", "subgroup")) {
            if (!gens->is_array())
                rd.problems.push_back("subgroup.generators must be an array");
            else
                for (std::size_t i = 0; i < gens->size(); ++i) {
                    const std::string where = "subgroup.generators[" + std::to_string(i) + "]";
                    const Json& e = (*gens)[i];
                    if (e.is_string())
                        d.subgroup.push_back({e.get<std::string>(), std::nullopt});
                    else if (auto v = rd.images(e, where))
                        d.subgroup.push_back({std::nullopt, *v});
                }
        }
    }

    if (const Json* f = rd.member(root, "field", "descriptor", false)) {
        FieldDescriptor fd;
        if (const Json* p = rd.member(*f, "polynomial", "field")) {
            if (!p->is_array())
                rd.problems.push_back("field.polynomial must be an array of integers");
            else
                for (std::size_t i = 0; i < p->size(); ++i) {
                    const Json& c = (*p)[i];
                    if (c.is_number_integer())
                        fd.minimal_polynomial.push_back(Z(std::to_string(c.get<long long>())));
                    else if (c.is_string() && is_integral(parse_rational(c.get<std::string>())))
                        fd.minimal_polynomial.push_back(parse_rational(c.get<std::string>()).get_num());
                    else
                        rd.problems.push_back("field.polynomial[" + std::to_string(i) + "] must be an integer");
                }
        }
        if (const Json* a = rd.member(*f, "automorphisms", "field")) {
            if (!a->is_object())
                rd.problems.push_back("field.automorphisms must be an object of label: image");
            else
                for (const auto& [label, img] : a->items())
                    if (auto v = rd.rationals(img, "field.automorphisms." + label))
                        fd.automorphisms.push_back({label, *v});
        }
        if (auto s = rd.string(rd.member(*f, "irreducible", "field", false), "field.irreducible")) {
            if (*s == "asserted")
                fd.irreducible_asserted = true;
            else if (*s != "proved")
                rd.problems.push_back("field.irreducible must be \"asserted\" or \"proved\"");
        }
        d.field = std::move(fd);
    }

    if (const Json* ib = rd.member(root, "integral_basis", "descriptor", false)) {
        if (!ib->is_array())
            rd.problems.push_back("integral_basis must be an array");
        else
            for (std::size_t i = 0; i < ib->size(); ++i)
                if (auto v = rd.rationals((*ib)[i], "integral_basis[" + std::to_string(i) + "]"))
                    d.integral_basis.push_back(*v);
    }

    if (const Json* id = rd.member(root, "ideals", "descriptor", false)) {
        if (!id->is_object())
            rd.problems.push_back("ideals must be an object of name: basis");
        else
            for (const auto& [name, spec] : id->items()) {
                IdealSpec s{name, false, {}};
                if (spec.is_string() && spec.get<std::string>() == "integral_basis") {
                    s.integral_basis = true;
                } else if (spec.is_array()) {
                    for (std::size_t i = 0; i < spec.size(); ++i)
                        if (auto v = rd.rationals(spec[i], "ideals." + name + "[" + std::to_string(i) + "]"))
                            s.generators.push_back(*v);
                } else {
                    rd.problems.push_back("ideals." + name + " must be \"integral_basis\" or an array of elements");
                }
                d.ideals.push_back(std::move(s));
            }
    }

    if (const Json* as = rd.member(root, "assertions", "descriptor", false)) {
        if (!as->is_object()) {
            rd.problems.push_back("assertions must be an object");
        } else {
            for (const auto& [key, val] : as->items()) {
                const std::string where = "assertions." + key;
                if (key == "structures" || key == "center_order") {
                    if (auto v = rd.integer(val, where))
                        (key == "structures" ? d.assertions.structures : d.assertions.center_order) =
                            static_cast<std::size_t>(*v);
                } else if (key == "normal_subgroup_orders") {
                    std::vector<std::size_t> orders;
                    if (!val.is_array()) rd.problems.push_back(where + " must be an array");
                    for (const auto& o : val)
                        if (auto v = rd.integer(o, where)) orders.push_back(static_cast<std::size_t>(*v));
                    d.assertions.normal_subgroup_orders = std::move(orders);
                } else {
                    rd.problems.push_back("unknown assertion '" + key + "'");
                }
            }
        }
    }
    if (!rd.problems.empty()) throw ValidationError(rd.problems);
    return d;
}

/// Canonical JSON form of a descriptor.
inline Json to_json(const ExtensionDescriptor& d) {
    auto strings = [](const QVector& v) {
        Json a = Json::array();
        for (const auto& q : v) a.push_back(q.get_str());
        return a;
    };
    Json j;
    j["name"] = d.name;
    if (!d.description.empty()) j["description"] = d.description;
    Json g;
    g["order"] = d.order;
    g["generators"] = Json::object();
    for (const auto& p : d.generators) g["generators"][p.label] = p.images;
    if (!d.relations.empty()) g["relations"] = d.relations;
    j["group"] = g;
    Json sg = Json::array();
    for (const auto& s : d.subgroup) {
        if (s.word)
            sg.push_back(*s.word);
        else
            sg.push_back(*s.images);
    }
    j["subgroup"]["generators"] = sg;
    if (d.field) {
        Json f;
        Json poly = Json::array();
        for (const auto& c : d.field->minimal_polynomial) {
            if (c.fits_slong_p())
                poly.push_back(c.get_si());
            else
                poly.push_back(c.get_str());
        }
        f["polynomial"] = poly;
        f["automorphisms"] = Json::object();
        for (const auto& a : d.field->automorphisms) f["automorphisms"][a.label] = strings(a.image);
        if (d.field->irreducible_asserted) f["irreducible"] = "asserted";
        j["field"] = f;
    }
    if (!d.integral_basis.empty()) {
        Json ib = Json::array();
        for (const auto& v : d.integral_basis) ib.push_back(strings(v));
        j["integral_basis"] = ib;
    }
    if (!d.ideals.empty()) {
        Json id = Json::object();
        for (const auto& s : d.ideals) {
            if (s.integral_basis) {
                id[s.name] = "integral_basis";
            } else {
                Json gens = Json::array();
                for (const auto& v : s.generators) gens.push_back(strings(v));
                id[s.name] = gens;
            }
        }
        j["ideals"] = id;
    }
    Json as = Json::object();
    if (d.assertions.structures) as["structures"] = *d.assertions.structures;
    if (d.assertions.center_order) as["center_order"] = *d.assertions.center_order;
    if (d.assertions.normal_subgroup_orders) as["normal_subgroup_orders"] = *d.assertions.normal_subgroup_orders;
    if (!as.empty()) j["assertions"] = as;
    return j;
}

inline std::string print(const ExtensionDescriptor& d) { return to_json(d).dump(2) + "\n"; }

/// Evaluates a word such as "t s t^-1 s^-2" (tokens separated by spaces or '*',
/// composed left to right as functions: the rightmost factor acts first).
inline Permutation evaluate_word(const std::string& word, const std::vector<LabeledPermutation>& labels,
                                 std::size_t degree) {
    std::string w = word;
    for (auto& ch : w)
        if (ch == '*') ch = ' ';
    std::istringstream is(w);
    std::string tok;
    Permutation result = Permutation::identity(degree);
    bool any = false;
    while (is >> tok) {
        any = true;
        std::string label = tok;
        long long exp = 1;
        if (auto caret = tok.find('^'); caret != std::string::npos) {
            label = tok.substr(0, caret);
            const std::string e = tok.substr(caret + 1);
            try {
                std::size_t used = 0;
                exp = std::stoll(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                throw StructuralError("bad exponent in word '" + word + "'");
            }
        }
        auto it = std::find_if(labels.begin(), labels.end(), [&](const auto& p) { return p.label == label; });
        if (it == labels.end()) throw StructuralError("unknown generator '" + label + "' in word '" + word + "'");
        Permutation base = Permutation::from_images(it->images);
        if (exp < 0) {
            base = base.inverse();
            exp = -exp;
        }
        for (long long k = 0; k < exp; ++k) result = result * base;
    }
    if (!any) throw StructuralError("empty word");
    return result;
}

/// A descriptor with every derived object built and validated.
struct LoadedFixture {
    ExtensionDescriptor descriptor;
    CosetSpace X;
    std::optional<LambdaEmbedding> lambda;
    std::optional<Extension> ext;
    std::optional<IntegerLattice> OL;  // L-coordinates
    std::vector<FractionalIdeal> ideals;

    const FiniteGroup& G() const noexcept { return X.group; }
    bool has_field() const noexcept { return ext.has_value(); }

    const FractionalIdeal& ideal(const std::string& name) const {
        for (const auto& i : ideals)
            if (i.name == name) return i;
        throw DomainError("fixture '" + descriptor.name + "' has no ideal named '" + name + "'");
    }
};

/// Validates everything semantic; all failures are reported together.
inline LoadedFixture build_fixture(ExtensionDescriptor d) {
    std::vector<std::string> problems;
    LoadedFixture F;

    // Group.
    std::vector<Permutation> gens;
    std::size_t degree = d.generators.empty() ? 0 : d.generators.front().images.size();
    for (const auto& p : d.generators) {
        try {
            if (p.images.size() != degree) throw StructuralError("has degree " + std::to_string(p.images.size()));
            gens.push_back(Permutation::from_images(p.images));
        } catch (const Error& e) {
            problems.push_back("group generator '" + p.label + "': " + e.what());
        }
    }
    if (!problems.empty()) throw ValidationError(problems);
    FiniteGroup G;
    try {
        G = FiniteGroup::generated_by(degree, gens);
    } catch (const Error& e) {
        throw ValidationError(std::string("group: ") + e.what());
    }
    if (G.order() != d.order)
        problems.push_back("group generators produce a group of order " + std::to_string(G.order()) +
                           ", declared order is " + std::to_string(d.order));
    for (const auto& r : d.relations) {
        try {
            Permutation p = evaluate_word(r, d.generators, degree);
            if (!p.is_identity())
                problems.push_back("relation '" + r + "' does not hold: it evaluates to " + p.to_string());
        } catch (const Error& e) {
            problems.push_back(std::string("relation: ") + e.what());
        }
    }

    // Stabilizer.
    std::vector<std::size_t> stab;
    for (const auto& s : d.subgroup) {
        try {
            Permutation p = s.word ? evaluate_word(*s.word, d.generators, degree)
                                   : Permutation::from_images(*s.images);
            auto idx = G.index_of(p);
            if (!idx)
                problems.push_back("subgroup generator " + (s.word ? "'" + *s.word + "' " : std::string()) +
                                   p.to_string() + " is not an element of G");
            else
                stab.push_back(*idx);
        } catch (const Error& e) {
            problems.push_back(std::string("subgroup generator: ") + e.what());
        }
    }
    if (!problems.empty()) throw ValidationError(problems);
    F.X = build_coset_space(G, G.closure(stab));
    F.lambda.emplace(F.X);

    if (!d.field) {
        if (!d.integral_basis.empty()) problems.push_back("integral_basis requires a field block");
        if (!d.ideals.empty()) problems.push_back("ideals require a field block");
        if (!problems.empty()) throw ValidationError(problems);
        F.descriptor = std::move(d);
        return F;
    }

    std::vector<std::pair<std::string, std::size_t>> label_index;
    for (std::size_t i = 0; i < d.generators.size(); ++i) label_index.emplace_back(d.generators[i].label, *G.index_of(gens[i]));
    GaloisField field = GaloisField::load(*d.field, G, label_index);  // throws its own ValidationError
    F.ext.emplace(std::move(field), F.X);
    const Extension& ext = *F.ext;
    const std::size_t n = ext.n(), m = ext.m();

    // Integral basis of L, in E-coordinates.
    std::vector<QVector> ob;
    for (std::size_t i = 0; i < d.integral_basis.size(); ++i) {
        const auto& v = d.integral_basis[i];
        if (v.size() != n) {
            problems.push_back("integral_basis[" + std::to_string(i) + "] has " + std::to_string(v.size()) +
                               " coordinates, expected " + std::to_string(n));
            continue;
        }
        auto c = ext.L().coordinates(FieldElement(v));
        if (!c)
            problems.push_back("integral_basis[" + std::to_string(i) + "] is not fixed by G_L");
        else
            ob.push_back(*c);
    }
    if (!problems.empty()) throw ValidationError(problems);
    if (!ob.empty()) {
        if (ob.size() != m || rank(QMatrix::from_rows(ob, m)) != m) {
            problems.push_back("integral_basis must have " + std::to_string(m) + " independent elements");
        } else {
            IntegerLattice OL = IntegerLattice::from_generators(ob, m);
            if (!OL.contains(ext.L_coords(ext.E().one()))) problems.push_back("integral_basis does not contain 1");
            for (std::size_t i = 0; i < ob.size(); ++i)
                for (std::size_t j = i; j < ob.size(); ++j) {
                    FieldElement p = ext.E().mul(FieldElement(d.integral_basis[i]), FieldElement(d.integral_basis[j]));
                    if (!OL.contains(ext.L_coords(p)))
                        problems.push_back("integral_basis is not closed: integral_basis[" + std::to_string(i) +
                                           "] * integral_basis[" + std::to_string(j) + "] = " + p.to_string() +
                                           " is not an integer combination");
                }
            F.OL = std::move(OL);
        }
    }
    if (!problems.empty()) throw ValidationError(problems);

    for (const auto& s : d.ideals) {
        if (!F.OL) {
            problems.push_back("ideal '" + s.name + "' needs an integral_basis");
            continue;
        }
        std::vector<QVector> gens_L;
        if (s.integral_basis) {
            gens_L = F.OL->basis();
        } else {
            for (std::size_t i = 0; i < s.generators.size(); ++i) {
                const auto& v = s.generators[i];
                std::optional<QVector> c;
                if (v.size() == n) c = ext.L().coordinates(FieldElement(v));
                if (!c)
                    problems.push_back("ideal '" + s.name + "' generator " + std::to_string(i) + " is not in L");
                else
                    gens_L.push_back(*c);
            }
        }
        try {
            F.ideals.push_back(make_ideal(ext, s.name, gens_L, *F.OL));
        } catch (const ValidationError& e) {
            for (const auto& p : e.problems()) problems.push_back(p);
        } catch (const DomainError& e) {
            problems.push_back("ideal '" + s.name + "': " + e.what());
        }
    }
    if (!problems.empty()) throw ValidationError(problems);
    F.descriptor = std::move(d);
    return F;
}

inline LoadedFixture load_fixture_text(const std::string& text) { return build_fixture(read_descriptor(text)); }

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LoadedFixture load_fixture(const std::string& path) { return load_fixture_text(read_file(path)); }

/// Fully validated descriptor.
inline ExtensionDescriptor parse(const std::string& path) { return load_fixture(path).descriptor; }

}  // namespace hgs
