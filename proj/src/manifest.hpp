#pragma once

#include "deformation.hpp"
#include "ns.hpp"

#include <map>
#include <string>

#include <json.hpp>

namespace l3kit {

// One named object in a manifest. `type` selects which member is meaningful;
// reference fields keep the names used in the file so saving round-trips.
struct ManifestObject {
    std::string type; // algebra | leibniz | representation | cochain | operator | ns | deformation

    ThreeLeibnizAlgebra algebra;
    LeibnizAlgebra leibniz;
    LinearOperator op;
    NSAlgebra ns;

    std::string algebra_ref; // representation -> algebra
    Representation rep;

    std::string rep_ref; // cochain, deformation -> representation
    Cochain cochain;

    std::string phi_ref; // deformation -> cochain
    std::vector<LinearOperator> terms;
};

struct Manifest {
    std::map<std::string, ManifestObject> objects;
};

// Raised with a location for every malformed manifest: unparsable scalar,
// dangling reference, inconsistent dimensions.
struct manifest_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

// Canonical text: sorted object names, fixed key order, sparse entries in
// index order, zero coefficients omitted. Saving a saved file reproduces it
// byte for byte.
std::string save_manifest(const Manifest& m);

nlohmann::ordered_json object_to_json(const ManifestObject& o);

// Typed accessors; missing names or mismatched types raise manifest_error.
const ManifestObject& get_object(const Manifest& m, const std::string& name, const std::string& type);

// Convenience builders for command artifacts.
ManifestObject wrap_algebra(ThreeLeibnizAlgebra a);
ManifestObject wrap_operator(LinearOperator t);
ManifestObject wrap_ns(NSAlgebra n);
ManifestObject wrap_cochain(Cochain c, std::string rep_ref);
ManifestObject wrap_representation(Representation r, std::string algebra_ref);

} // namespace l3kit
