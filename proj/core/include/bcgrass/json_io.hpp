#pragma once

#include <string>

#include "bcgrass/arakelov.hpp"
#include "bcgrass/bcform.hpp"
#include "bcgrass/harmonic.hpp"
#include "bcgrass/symfunc.hpp"

namespace bcgrass {

// Stable single-line JSON encodings of the public value types. Term lists are
// emitted in the canonical map order, so output is byte-reproducible.

/// {"kind":"symf","basis":"s","terms":[{"partition":[2,1],"coeff":"1/3"}]}
std::string to_json_string(const SymF& f);

/// {"kind":"bcform","n":4,"r":2,"terms":[{"omega":0,"p":2,"coeff":"-3/2"}]}
std::string to_json_string(const BCForm& f);

/// {"kind":"arakelov","r":1,"s":1,"geom":[...],"arch":[...]}
std::string to_json_string(const ArakelovElem& x);

/// {"identity":"...","params":{...},"lhs":"a/b","rhs":"a/b","holds":true}
std::string to_json_string(const IdentityReport& rep);

}  // namespace bcgrass
