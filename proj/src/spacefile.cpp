#include "loopdec/spacefile.hpp"

#include <fstream>

#include "loopdec/serialize.hpp"

namespace loopdec {

namespace {

SpaceEntry parse_entry(const nlohmann::json& j, const std::string& source, size_t index)
{
    const std::string where = source + ": space #" + std::to_string(index + 1);
    if (!j.is_object())
        throw SpaceFileError(where + " is not an object");
    if (!j.contains("name") || !j["name"].is_string() || j["name"].get<std::string>().empty())
        throw SpaceFileError(where + " needs a nonempty \"name\"");
    SpaceEntry entry;
    entry.name = j["name"].get<std::string>();
    if (!j.contains("series") || !j["series"].is_object())
        throw SpaceFileError(source + ": space " + entry.name +
                             " needs a \"series\" object keyed by degree");
    for (const auto& [key, value] : j["series"].items()) {
        size_t used = 0;
        int degree = 0;
        try {
            degree = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || key.empty())
            throw SpaceFileError(source + ": space " + entry.name + " has degree key \"" + key +
                                 "\" that is not an integer");
        if (degree < 2)
            throw SpaceFileError(source + ": space " + entry.name + " has a class in degree " +
                                 std::to_string(degree) +
                                 "; descriptors must be simply connected (degrees >= 2)");
        Int dim = 0;
        try {
            dim = int_from_json(value);
        } catch (const std::exception& e) {
            throw SpaceFileError(source + ": space " + entry.name + ", degree " + key + ": " +
                                 e.what());
        }
        if (dim < 0)
            throw SpaceFileError(source + ": space " + entry.name + " has negative rank in degree " +
                                 key);
        if (dim != 0)
            entry.dims[degree] = dim;
    }
    return entry;
}

}  // namespace

SpaceFile parse_space_file(const nlohmann::json& doc, const std::string& source)
{
    SpaceFile file;
    const nlohmann::json* list = nullptr;
    if (doc.is_array()) {
        list = &doc;
    } else if (doc.is_object()) {
        for (const auto& [key, value] : doc.items()) {
            if (key == "spaces") {
                if (!value.is_array())
                    throw SpaceFileError(source + ": \"spaces\" must be an array");
                list = &value;
            } else if (key == "prime") {
                if (!value.is_number_integer() || value.get<long long>() < 2)
                    throw SpaceFileError(source + ": \"prime\" must be an integer >= 2");
                file.prime = value.get<long long>();
            } else if (key == "cutoff") {
                if (!value.is_number_integer() || value.get<int>() < 0)
                    throw SpaceFileError(source + ": \"cutoff\" must be an integer >= 0");
                file.cutoff = value.get<int>();
            } else {
                throw SpaceFileError(source + ": unknown key \"" + key + "\"");
            }
        }
        if (list == nullptr)
            throw SpaceFileError(source + ": missing \"spaces\" array");
    } else {
        throw SpaceFileError(source + ": top level must be an array of spaces or an object");
    }
    for (size_t i = 0; i < list->size(); ++i)
        file.spaces.push_back(parse_entry((*list)[i], source, i));
    if (file.spaces.empty())
        throw SpaceFileError(source + ": no spaces listed");
    return file;
}

SpaceFile load_space_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw SpaceFileError("cannot open space file: " + path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpaceFileError(path + ": " + e.what());
    }
    return parse_space_file(doc, path);
}

std::vector<SpaceDescriptor> materialize_spaces(const SpaceFile& file, int cutoff)
{
    if (cutoff < 0)
        throw SpaceFileError("cutoff must be >= 0, got " + std::to_string(cutoff));
    if (file.cutoff && cutoff > *file.cutoff)
        throw SpaceFileError("requested cutoff " + std::to_string(cutoff) +
                             " exceeds the file's certified cutoff " +
                             std::to_string(*file.cutoff));
    std::vector<SpaceDescriptor> out;
    out.reserve(file.spaces.size());
    for (const auto& entry : file.spaces) {
        TruncatedSeries reduced = TruncatedSeries::zero(cutoff);
        for (const auto& [degree, dim] : entry.dims)
            if (degree <= cutoff)
                reduced.set_coeff(degree, dim);
        out.emplace_back(entry.name, std::move(reduced));
    }
    return out;
}

}  // namespace loopdec
