#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "actkit/act.hpp"
#include "actkit/congruence.hpp"
#include "actkit/semigroup.hpp"

namespace actkit {

using Json = nlohmann::json;

// Text formats
//
//   semigroup <n>          act <m> over <file|inline>
//   <n rows of n indices>  [inline semigroup block]
//   [identity <k>]         <m rows of n indices>
//
// Blank lines are ignored and '#' starts a comment. Relative semigroup
// paths in an act file resolve against the act file's directory.

Semigroup parse_semigroup(std::string_view text);
Act parse_act(std::string_view text,
              const std::filesystem::path& base_dir = ".");

std::string format_semigroup(const Semigroup& s);
/// Always writes the semigroup inline.
std::string format_act(const Act& a);

using Document = std::variant<Semigroup, Act>;

/// Reads a semigroup or act from text or JSON (detected by a leading '{').
Document parse_document(std::string_view text,
                        const std::filesystem::path& base_dir = ".");
Document read_document(const std::filesystem::path& path);
Semigroup read_semigroup(const std::filesystem::path& path);
Act read_act(const std::filesystem::path& path);

// JSON mirror: {"semigroup": {"table": [[...]], "identity": k}} and
// {"semigroup": {...}, "act": {"action": [[...]]}}.

Json to_json(const Semigroup& s);
Json to_json(const Act& a);
Document document_from_json(const Json& j);

/// Space-separated block labels, e.g. "0 0 2".
std::string format_congruence(const Congruence& rho);
Congruence parse_congruence(std::string_view text);

Json to_json(ElementSet set);
Json to_json(const Congruence& rho);
Json to_json(const ActHom& f);

/// Rows of a table as nested arrays.
Json table_json(std::span<const Index> flat, std::size_t columns);

}  // namespace actkit
