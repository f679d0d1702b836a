#pragma once

#include "spinc8/bundles.hpp"
#include "spinc8/cohomology.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spinc8::catalog {

struct ExpectedResult {
    std::string criterion;
    std::string expectation;
    std::string provenance;  // "paper", "derived" or "unverified-source"
};

struct CatalogEntry {
    ManifoldModel model;
    std::vector<ExpectedResult> expected;
    bool unverified_source = false;
};

std::vector<std::string> builtin_names();

/// Validated built-in model. Throws error for an unknown name.
CatalogEntry builtin(const std::string& name);

/// Closed simply-connected 4-manifold data for products: torsion-free,
/// b1 = b3 = 0, H^4 generator normalized to evaluate to 1.
struct FourfoldData {
    std::string name;
    std::vector<std::string> gen_names;            // H^2 generator names
    std::vector<std::vector<Int>> intersection;    // symmetric, unimodular
    Int p1 = 0;                                    // coefficient of the H^4 generator
    Int euler = 0;                                 // = 2 + b2
    std::vector<Int> w2_lift;                      // integral lift of w2
    std::optional<Int> signature;
};

FourfoldData fourfold_S4();
FourfoldData fourfold_CP2(const std::string& gen = "x");

/// Graded tensor product of two 4-manifold factors, with tangent data by
/// the Whitney formula. Rejects inconsistent factor data.
ManifoldModel kunneth_product(const FourfoldData& A, const FourfoldData& B);

}  // namespace spinc8::catalog

namespace spinc8 {

/// Parse/serialize the manifold description format (JSON, big integers as
/// decimal strings, unknown keys rejected).
ManifoldModel parse_model(const std::string& json_text);
std::string serialize_model(const ManifoldModel& M);

/// load also runs validate_ring and the tangent invariants.
ManifoldModel load_model(const std::string& path);
void save_model(const ManifoldModel& M, const std::string& path);

/// Bundle description files: coordinate vectors for integral classes,
/// bit vectors for mod-2 classes.
RealBundleData parse_real_bundle(const ManifoldModel& M, const std::string& json_text);
ComplexBundleData parse_complex_bundle(const ManifoldModel& M, const std::string& json_text);

}  // namespace spinc8
