#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "hsalg/moduli.hpp"

namespace hsalg {

using json = nlohmann::json;

/// Parsed JSON text plus the line on which every value starts, keyed by
/// JSON pointer ("/images/0/1").
struct Document {
    std::string name;
    json root;
    std::map<std::string, int> lines;
};

/// ParseError "<name>:<line>: ..." on malformed JSON.
Document parse_document(std::string name, const std::string& text);
/// ParseError when the file is missing or malformed.
Document load_document(const std::string& path);

/// Position inside a Document. Every failure names file, line and field.
class Cursor {
public:
    Cursor(const Document& doc) : doc_(&doc), node_(&doc.root) {}

    const json& value() const { return *node_; }
    const std::string& pointer() const { return ptr_; }
    bool has(const std::string& key) const;
    /// ParseError when the key is missing or the value is not an object.
    Cursor operator[](const std::string& key) const;
    Cursor operator[](std::size_t index) const;
    std::size_t size() const;

    std::string as_string() const;
    long long as_int() const;
    void expect_array() const;
    void expect_object() const;

    [[noreturn]] void fail(const std::string& message) const;

private:
    Cursor(const Document* doc, const json* node, std::string ptr)
        : doc_(doc), node_(node), ptr_(std::move(ptr)) {}
    int line() const;

    const Document* doc_;
    const json* node_;
    std::string ptr_;
};

// Scalars and linear algebra. Readers also accept shorthand: integers, and
// strings such as "1/2", "-3i" or "1/2-3i".
json to_json(const Rational& q);
json to_json(const Complex& z);
json to_json(const Vector& v);
json to_json(const Matrix& m);
json to_json(const Subspace& s);
Rational read_rational(const Cursor& c);
Complex read_complex(const Cursor& c);
Vector read_vector(const Cursor& c, std::optional<std::size_t> length = std::nullopt);
Matrix read_matrix(const Cursor& c);

json to_json(const Report& r);
Report read_report(const Cursor& c);

json to_json(const PairSpec& s);
/// Object {"family","params"} or an id string like "grassmannian(1,2)".
PairSpec read_pair_spec(const Cursor& c);

json to_json(const LieAlgebra& alg);
/// {"name","ambient_size","basis"} or {"name","dim","structure_constants"}.
LieAlgebra read_algebra(const Cursor& c);

json to_json(const HermitianPair& p);
/// Reads every basis back from the JSON; nothing is recomputed.
HermitianPair read_hermitian_pair(const Cursor& c);

json to_json(const TargetAlgebra& t);
TargetAlgebra read_target(const Cursor& c);

/// EtaSpec together with the pair and target it refers to.
struct EtaInput {
    PairSpec pair;
    TargetAlgebra target;
    std::vector<LieElement> images;
};
json eta_to_json(const BundleContext& ctx);
/// Images are coordinate arrays or {"matrix": ...} for matrix targets.
/// pair_override and target_override fill in or must agree with the file.
EtaInput read_eta(const Cursor& c, const std::optional<PairSpec>& pair_override = std::nullopt,
                  const std::optional<TargetAlgebra>& target_override = std::nullopt);

json to_json(const ZkDecomposition& d);
ZkDecomposition read_decomposition(const Cursor& c);

std::string_view sign_symbol(Sign s);
Sign read_sign(const Cursor& c);
json to_json(const InvariantSpace& s);
InvariantSpace read_invariant_space(const Cursor& c);
json to_json(const InvariantElement& e);
InvariantElement read_invariant_element(const Cursor& c);

/// {"kind", "beta", "phi"} where beta and phi are either tensor coordinates
/// or {"basis_coords": [...]} in the invariant-space basis.
ModuliTriple read_triple(const Cursor& c, std::shared_ptr<const BundleContext> ctx,
                         std::optional<Kind> kind_override = std::nullopt);
json to_json(const ModuliTriple& t);

json to_json(const QuadraticSystem& s);
QuadraticSystem read_system(const Cursor& c);

json to_json(const SolutionSet& s);
SolutionSet read_solution(const Cursor& c);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const json& j);

} // namespace hsalg
