#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include <lft/connection.hpp>

namespace lft
{

using json = nlohmann::ordered_json;

// A parsed connection document: the pieces, the coefficient backend they are
// written in, and any metadata block carried along verbatim.
struct document
{
    connection conn;
    backend ring;
    bool declares_backend = false;
    json metadata;
};

// Strict parser: unknown fields, fractional exponents and vanishing leading
// coefficients are rejected. An explicit backend overrides the declared one
// only when the two agree or the document declares none.
document parse_document(std::string_view text, const std::optional<backend> &ring = std::nullopt);

connection parse_connection(std::string_view text);

json backend_to_json(const backend &ring);
json piece_to_json(const connection_piece &piece);
json connection_to_json(const connection &conn, const backend &ring, const json &metadata = json());

// Two-space indented JSON followed by a newline.
std::string emit(const json &doc);
std::string emit_connection(const connection &conn, const backend &ring, const json &metadata = json());

} // namespace lft
