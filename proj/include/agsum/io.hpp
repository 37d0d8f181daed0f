#ifndef AGSUM_IO_HPP
#define AGSUM_IO_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "agsum/betti.hpp"
#include "agsum/ideal.hpp"

namespace agsum {

/// Malformed input file; the message carries the source name and the line,
/// column or field path of the problem.
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Contents of an algebra description, before polynomials are parsed (the
/// field may still be overridden).
struct AlgebraFile {
    std::string source;
    std::vector<std::string> variables;
    FieldSpec field;
    std::vector<std::string> ideal;
    std::optional<std::string> dual_generator;
};

/// {"variables": [...], "field": "QQ" | {"prime": p}, "ideal": [...]} or the
/// same with "dual_generator": "poly" instead of "ideal".
AlgebraFile parse_algebra_json(std::string_view text, const std::string& source = "<input>");
AlgebraFile read_algebra_file(const std::string& path);

FieldSpec parse_field(const nlohmann::json& j, const std::string& where = "field");

/// Parses the polynomials over `field` (or the file's own field); a dual
/// generator is turned into its annihilator presentation.
template <class K>
Presentation<K> to_presentation(const AlgebraFile& file, const FieldSpec& field);

/// {"betti": [[i,j,c],...], "hilbert": [...], "poincare": "..."}, plus "ideal" when given.
nlohmann::json machine_output(const BettiTable* betti, const std::vector<std::size_t>* hilbert,
                              const std::vector<std::string>* ideal = nullptr);
BettiTable betti_from_json(const nlohmann::json& j);

}  // namespace agsum

#endif
