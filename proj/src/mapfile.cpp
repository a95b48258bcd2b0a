#include "veronese/mapfile.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "veronese/errors.hpp"
#include "veronese/expr.hpp"

namespace veronese {

namespace {

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

int parse_int_field(const std::string& value, const std::string& key, std::size_t line) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ParseError("invalid integer for '" + key + "'", line, 1);
    }
}

}  // namespace

MapFile parse_map_file(std::string_view text) {
    MapFile file;
    bool saw_header = false;
    bool in_inverse = false;
    std::istringstream stream{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    bool have_n = false, have_d = false, have_context = false, have_bound = false;
    while (std::getline(stream, raw)) {
        ++line_no;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (!saw_header) {
            std::istringstream fields(line);
            std::string field;
            while (fields >> field) {
                const auto eq = field.find('=');
                if (eq == std::string::npos)
                    throw ParseError("header fields must look like key=value", line_no, 1);
                const std::string key = field.substr(0, eq);
                const std::string value = field.substr(eq + 1);
                if (key == "context") {
                    if (value == "poly")
                        file.kind = ContextKind::Polynomial;
                    else if (value == "poisson")
                        file.kind = ContextKind::Poisson;
                    else
                        throw ParseError("context must be 'poly' or 'poisson'", line_no, 1);
                    have_context = true;
                } else if (key == "n") {
                    file.n = parse_int_field(value, key, line_no);
                    have_n = true;
                } else if (key == "d") {
                    file.d = parse_int_field(value, key, line_no);
                    have_d = true;
                } else if (key == "bound") {
                    file.bound = parse_int_field(value, key, line_no);
                    have_bound = true;
                } else {
                    throw ParseError("unknown header field '" + key + "'", line_no, 1);
                }
            }
            if (!have_context || !have_n || !have_d)
                throw ParseError("header needs context=, n= and d=", line_no, 1);
            if (file.kind == ContextKind::Poisson && !have_bound)
                throw ParseError("poisson context needs bound=", line_no, 1);
            saw_header = true;
            continue;
        }
        if (line == "inverse") {
            if (in_inverse) throw ParseError("duplicate 'inverse' section", line_no, 1);
            in_inverse = true;
            file.inverse_entries.emplace();
            continue;
        }
        std::istringstream entry_stream(line);
        std::string keyword;
        entry_stream >> keyword;
        if (keyword != "gen" && keyword != "var")
            throw ParseError("expected 'gen', 'var' or 'inverse'", line_no, 1);
        std::string rest;
        std::getline(entry_stream, rest);
        const auto arrow = rest.find("->");
        if (arrow == std::string::npos) throw ParseError("expected '->' in mapping line", line_no, 1);
        MapFileEntry entry;
        entry.keyword = keyword;
        entry.key = trim(rest.substr(0, arrow));
        entry.value = trim(rest.substr(arrow + 2));
        entry.line = line_no;
        if (entry.key.empty() || entry.value.empty())
            throw ParseError("empty side of '->'", line_no, 1);
        (in_inverse ? *file.inverse_entries : file.entries).push_back(std::move(entry));
    }
    if (!saw_header) throw ParseError("missing header line", line_no ? line_no : 1, 1);
    if (file.entries.empty()) throw ParseError("no mapping lines", line_no, 1);
    return file;
}

std::shared_ptr<const VeroneseGeneratorSet> build_generator_set(const MapFile& file) {
    if (file.kind == ContextKind::Polynomial) return VeroneseGeneratorSet::polynomial(file.n, file.d);
    return VeroneseGeneratorSet::poisson(LyndonBasis::make(file.n, file.bound), file.d);
}

namespace {

PoissonElement parse_in_context(const VeroneseGeneratorSet& gens, const std::string& text, std::size_t line) {
    try {
        if (gens.kind() == ContextKind::Poisson) return parse_poisson(text, gens.table());
        return PoissonElement(gens.table(), parse_polynomial(text, gens.n()));
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " [in line " + std::to_string(line) + "]", line, 1);
    }
}

std::vector<PoissonElement> bind_generator_images(const VeroneseGeneratorSet& gens,
                                                  const std::vector<MapFileEntry>& entries) {
    std::vector<std::optional<PoissonElement>> images(gens.size());
    for (const auto& entry : entries) {
        if (entry.keyword != "gen")
            throw InvalidInput("line " + std::to_string(entry.line) + ": expected 'gen' entries");
        const PoissonElement key = parse_in_context(gens, entry.key, entry.line);
        if (key.is_zero() || key.poly().term_count() != 1 || key.poly().leading_term().second != 1)
            throw InvalidInput("line " + std::to_string(entry.line) + ": '" + entry.key +
                               "' is not a generator monomial");
        const int index = gens.index_of(key.poly().leading_term().first);
        if (index < 0)
            throw InvalidInput("line " + std::to_string(entry.line) + ": '" + entry.key +
                               "' is not a Veronese generator");
        if (images[index])
            throw InvalidInput("line " + std::to_string(entry.line) + ": duplicate image for '" + entry.key + "'");
        images[index] = parse_in_context(gens, entry.value, entry.line);
    }
    std::vector<PoissonElement> out;
    out.reserve(images.size());
    for (int i = 0; i < gens.size(); ++i) {
        if (!images[i]) throw InvalidInput("missing image for generator " + gens.generator_text(i));
        out.push_back(std::move(*images[i]));
    }
    return out;
}

AmbientMap bind_variable_images(const VeroneseGeneratorSet& gens, const std::vector<MapFileEntry>& entries) {
    const auto table = gens.table();
    std::vector<std::optional<PoissonElement>> images(table->size());
    for (const auto& entry : entries) {
        if (entry.keyword != "var")
            throw InvalidInput("line " + std::to_string(entry.line) + ": expected 'var' entries");
        const PoissonElement key = parse_in_context(gens, entry.key, entry.line);
        if (key.is_zero() || key.poly().term_count() != 1 || key.poly().leading_term().second != 1 ||
            key.poly().leading_term().first.total_degree() != 1)
            throw InvalidInput("line " + std::to_string(entry.line) + ": '" + entry.key +
                               "' is not an ambient variable");
        const int var = key.poly().leading_term().first.entries().front().first;
        if (images[var])
            throw InvalidInput("line " + std::to_string(entry.line) + ": duplicate image for '" + entry.key + "'");
        images[var] = parse_in_context(gens, entry.value, entry.line);
    }
    std::vector<PoissonElement> out;
    out.reserve(images.size());
    for (int i = 0; i < table->size(); ++i) {
        if (!images[i]) throw InvalidInput("missing image for variable " + table->name(i));
        out.push_back(std::move(*images[i]));
    }
    return AmbientMap::full(table, std::move(out));
}

}  // namespace

VeroneseDerivation bind_derivation(const MapFile& file) {
    auto gens = build_generator_set(file);
    auto images = bind_generator_images(*gens, file.entries);
    if (file.inverse_entries) throw InvalidInput("derivations have no inverse section");
    return make_derivation(std::move(gens), std::move(images));
}

VeroneseAutomorphism bind_automorphism(const MapFile& file) {
    auto gens = build_generator_set(file);
    auto images = bind_generator_images(*gens, file.entries);
    std::optional<std::vector<PoissonElement>> inverse;
    if (file.inverse_entries) inverse = bind_generator_images(*gens, *file.inverse_entries);
    return make_automorphism(std::move(gens), std::move(images), std::move(inverse));
}

AmbientMap bind_ambient_map(const MapFile& file) {
    auto gens = build_generator_set(file);
    return bind_variable_images(*gens, file.entries);
}

std::optional<AmbientMap> bind_inverse_ambient_map(const MapFile& file) {
    if (!file.inverse_entries) return std::nullopt;
    auto gens = build_generator_set(file);
    return bind_variable_images(*gens, *file.inverse_entries);
}

namespace {

std::string header_line(const VeroneseGeneratorSet& gens) {
    std::ostringstream out;
    out << "context=" << (gens.kind() == ContextKind::Poisson ? "poisson" : "poly") << " n=" << gens.n()
        << " d=" << gens.d();
    if (gens.kind() == ContextKind::Poisson) out << " bound=" << gens.bound();
    return out.str();
}

void write_entries(std::ostream& out, const VeroneseGeneratorSet& gens, const std::vector<PoissonElement>& images) {
    for (int i = 0; i < gens.size(); ++i)
        out << "gen " << gens.generator_text(i) << " -> " << to_string(images[i]) << "\n";
}

}  // namespace

std::string write_derivation_file(const VeroneseDerivation& der) {
    std::ostringstream out;
    out << header_line(*der.gens) << "\n";
    write_entries(out, *der.gens, der.images);
    return out.str();
}

std::string write_automorphism_file(const VeroneseAutomorphism& aut) {
    std::ostringstream out;
    out << header_line(*aut.gens) << "\n";
    write_entries(out, *aut.gens, aut.images);
    if (aut.inverse_images) {
        out << "inverse\n";
        write_entries(out, *aut.gens, *aut.inverse_images);
    }
    return out.str();
}

nlohmann::json element_json(const PoissonElement& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : f.poly().terms()) {
        nlohmann::json exponents = nlohmann::json::array();
        for (const auto& [var, exp] : m.entries()) exponents.push_back({var, exp});
        terms.push_back({std::move(exponents), c.get_num().get_str(), c.get_den().get_str()});
    }
    return nlohmann::json{{"text", to_string(f)}, {"terms", std::move(terms)}};
}

nlohmann::json context_json(const VeroneseGeneratorSet& gens) {
    nlohmann::json out{{"context", gens.kind() == ContextKind::Poisson ? "poisson" : "poly"},
                       {"n", gens.n()},
                       {"d", gens.d()}};
    if (gens.kind() == ContextKind::Poisson) out["bound"] = gens.bound();
    return out;
}

namespace {

nlohmann::json images_json(const VeroneseGeneratorSet& gens, const std::vector<PoissonElement>& images) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < gens.size(); ++i)
        out.push_back({{"generator", gens.generator_text(i)}, {"image", element_json(images[i])}});
    return out;
}

}  // namespace

nlohmann::json input_json(const VeroneseDerivation& der) {
    return nlohmann::json{{"kind", "derivation"},
                          {"context", context_json(*der.gens)},
                          {"images", images_json(*der.gens, der.images)}};
}

nlohmann::json input_json(const VeroneseAutomorphism& aut) {
    nlohmann::json out{{"kind", "automorphism"},
                       {"context", context_json(*aut.gens)},
                       {"images", images_json(*aut.gens, aut.images)}};
    if (aut.inverse_images) out["inverse_images"] = images_json(*aut.gens, *aut.inverse_images);
    return out;
}

nlohmann::json lift_report(const VeroneseGeneratorSet& gens, const LiftOutcome& outcome) {
    nlohmann::json out{{"context", context_json(gens)}};
    if (outcome.lifted) {
        out["status"] = "lifted";
        out["normalization"] = to_string(outcome.normalization);
        nlohmann::json images = nlohmann::json::array();
        for (std::size_t k = 0; k < outcome.map.scope.size(); ++k)
            images.push_back({{"variable", gens.table()->name(outcome.map.scope[k])},
                              {"image", element_json(outcome.map.images[k])}});
        out["images"] = std::move(images);
        if (!outcome.out_of_scope.empty()) {
            nlohmann::json skipped = nlohmann::json::array();
            for (int var : outcome.out_of_scope) skipped.push_back(gens.table()->name(var));
            out["out_of_scope"] = std::move(skipped);
        }
    } else {
        out["status"] = "obstructed";
        out["obstruction"] = {{"reason", to_string(*outcome.reason)}, {"witness", outcome.witness}};
        nlohmann::json data = nlohmann::json::object();
        for (const auto& [key, value] : outcome.witness_data) data[key] = value;
        out["obstruction"]["data"] = std::move(data);
    }
    return out;
}

nlohmann::json lnd_report_json(const VeroneseGeneratorSet& gens, const LiftOutcome& lift, const LndReport& report) {
    nlohmann::json out = lift_report(gens, lift);
    nlohmann::json indices = nlohmann::json::array();
    for (std::size_t k = 0; k < report.indices.size(); ++k) {
        nlohmann::json row{{"variable", gens.table()->name(lift.map.scope[k])}};
        if (report.indices[k])
            row["nilpotency_index"] = *report.indices[k];
        else
            row["nilpotency_index"] = nullptr;
        indices.push_back(std::move(row));
    }
    out["locally_nilpotent"] = {{"verdict", to_string(report.verdict)},
                                {"cap", report.cap},
                                {"indices", std::move(indices)},
                                {"witness", report.witness}};
    return out;
}

nlohmann::json kernel_report_json(const VeroneseGeneratorSet& gens, const Rational& lambda) {
    return nlohmann::json{{"context", context_json(gens)},
                          {"status", "ok"},
                          {"lambda", to_string(lambda)}};
}

}  // namespace veronese
