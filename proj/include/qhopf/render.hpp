#pragma once

#include "qhopf/element.hpp"
#include "qhopf/heights.hpp"
#include "qhopf/rep.hpp"

#include <string>

namespace qhopf {

// Plain-text forms. All of them iterate terms in the documented
// deterministic order, so equal values render to equal strings.
std::string to_string(const HPoly& p);
std::string to_string(const Necklace& n, const DoubleQuiver& dq);
std::string to_string(const NecklaceMonomial& m, const DoubleQuiver& dq);
std::string to_string(const SymLElement& e, const DoubleQuiver& dq);
std::string to_string(const TensorElement& t, const DoubleQuiver& dq);
std::string to_string(const Tensor3Element& t, const DoubleQuiver& dq);
std::string to_string(const HeightedCollection& c, const DoubleQuiver& dq);
std::string to_string(const HeightedElement& e, const DoubleQuiver& dq);
std::string to_string(VarId v, const DoubleQuiver& dq);
std::string to_string(const RepMono& m, const DoubleQuiver& dq);
std::string to_string(const RepPoly& p, const DoubleQuiver& dq);
std::string to_string(const DiffTerm& t, const DoubleQuiver& dq);
std::string to_string(const DiffOp& op, const DoubleQuiver& dq);

// Structured JSON (one line, sorted keys and terms).
std::string json_string(const SymLElement& e, const DoubleQuiver& dq);
std::string json_string(const TensorElement& t, const DoubleQuiver& dq);
std::string json_string(const HeightedElement& e, const DoubleQuiver& dq);
std::string json_string(const RepPoly& p, const DoubleQuiver& dq);
std::string json_string(const DiffOp& op, const DoubleQuiver& dq);

}  // namespace qhopf
