#ifndef LOOPDEC_SPACEFILE_HPP
#define LOOPDEC_SPACEFILE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "loopdec/space.hpp"

namespace loopdec {

/* Input problem with a space file: missing file, malformed JSON, or data
 * violating the schema. The message names the file and, for parse errors,
 * carries the position the JSON parser reported. */
class SpaceFileError : public std::runtime_error {
public:
    explicit SpaceFileError(const std::string& msg) : std::runtime_error(msg) {}
};

struct SpaceEntry {
    std::string name;
    std::map<int, Int> dims;  // reduced homology rank per degree
};

/* A wedge description: either a bare array of entries or an object
 * {"spaces": [...], "prime": p, "cutoff": n} with both scalars optional.
 * Each entry is {"name": "...", "series": {"3": 1, ...}}; degrees below 2
 * are rejected because every descriptor must be simply connected. A file
 * cutoff, when present, bounds how far the listed series are meant to be
 * trusted; without one the series are taken as exact (a finite wedge). */
struct SpaceFile {
    std::vector<SpaceEntry> spaces;
    std::optional<long long> prime;
    std::optional<int> cutoff;
};

SpaceFile parse_space_file(const nlohmann::json& doc, const std::string& source);
SpaceFile load_space_file(const std::string& path);

/* One descriptor per entry, truncated at the requested cutoff. Degrees the
 * file does not mention are zero; degrees beyond the cutoff are dropped.
 * Asking past the file's own cutoff is an error, the data is only certified
 * that far. */
std::vector<SpaceDescriptor> materialize_spaces(const SpaceFile& file, int cutoff);

}  // namespace loopdec

#endif
