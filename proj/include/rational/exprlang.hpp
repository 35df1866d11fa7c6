#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "rational/element.hpp"

namespace rational {

// Element expression mini-language:
//
//   E ::= id | x0 | swap | fp(<int>) | pex(<bits>-><bits>, ...)
//       | pair(E,E) | fix(E) | comp(E,E) | inv(E)
//       | raw(<file>) | glue(<bits>:E, ...)
//
// Whitespace-insensitive. Parse errors carry the offending position.
// `load_machine` resolves raw(<file>) references; the default loader reads
// the interchange format from disk.
using MachineLoader = std::function<Transducer(const std::string& path)>;

Element parse_element(std::string_view text);
Element parse_element(std::string_view text, const MachineLoader& load_machine);

} // namespace rational
