#include "whitney/io.hpp"

#include <fstream>
#include <sstream>

namespace whitney {

using nlohmann::json;

namespace {

Label label_from_json(const json& j) {
    if (!j.is_array() || j.empty() || j.size() > Label::kCapacity)
        throw WhitneyError(ErrorKind::ParseError, "a label is an array of 1 to 4 integers");
    std::vector<int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw WhitneyError(ErrorKind::ParseError, "label entries must be integers");
        v.push_back(x.get<int>());
    }
    return Label::of(v);
}

json label_to_json(const Label& l) { return json(l.to_vector()); }

} // namespace

json order_to_json(const LabelOrder& order) {
    switch (order.mode()) {
    case LabelOrder::Mode::LexTotal:
        return {{"mode", "lex"}};
    case LabelOrder::Mode::OrdinalSumGamma:
        return {{"mode", "gamma"}, {"n", order.gamma_n()}};
    case LabelOrder::Mode::CustomPartial: {
        json less = json::array();
        for (const auto& [a, b] : order.custom_pairs()) less.push_back({label_to_json(a), label_to_json(b)});
        return {{"mode", "custom"}, {"less", less}};
    }
    }
    return {};
}

LabelOrder order_from_json(const json& j) {
    if (!j.is_object() || !j.contains("mode")) throw WhitneyError(ErrorKind::ParseError, "order needs a mode");
    const std::string mode = j.at("mode").get<std::string>();
    if (mode == "lex") return LabelOrder::lex();
    if (mode == "gamma") return LabelOrder::ordinal_sum_gamma(j.at("n").get<int>());
    if (mode == "custom") {
        std::vector<std::pair<Label, Label>> pairs;
        for (const auto& p : j.at("less")) {
            if (!p.is_array() || p.size() != 2) throw WhitneyError(ErrorKind::ParseError, "order pairs have two labels");
            pairs.emplace_back(label_from_json(p[0]), label_from_json(p[1]));
        }
        return LabelOrder::custom(pairs);
    }
    throw WhitneyError(ErrorKind::ParseError, "unknown order mode '" + mode + "'");
}

PosetDocument poset_from_json(const json& j) {
    try {
        if (!j.is_object()) throw WhitneyError(ErrorKind::ParseError, "poset document must be an object");
        const auto n = j.at("n").get<long long>();
        if (n < 1) throw WhitneyError(ErrorKind::InvalidInput, "n must be positive");
        std::vector<Cover> covers;
        for (const auto& c : j.at("covers")) {
            if (!c.is_array() || c.size() != 2) throw WhitneyError(ErrorKind::ParseError, "a cover is [lo, hi]");
            const auto lo = c[0].get<long long>(), hi = c[1].get<long long>();
            if (lo < 0 || hi < 0 || lo >= n || hi >= n)
                throw WhitneyError(ErrorKind::InvalidInput, "cover endpoint out of range");
            covers.emplace_back(static_cast<ElementId>(lo), static_cast<ElementId>(hi));
        }
        std::vector<std::string> names;
        if (j.contains("names")) {
            names.resize(n);
            for (long long i = 0; i < n; ++i) names[i] = std::to_string(i);
            for (const auto& [k, v] : j.at("names").items()) {
                const long long id = std::stoll(k);
                if (id < 0 || id >= n) throw WhitneyError(ErrorKind::InvalidInput, "name id out of range");
                names[id] = v.get<std::string>();
            }
        }
        PosetDocument doc;
        doc.poset = build_poset(covers, static_cast<std::size_t>(n), std::move(names));
        if (j.contains("labels")) {
            LabelOrder order = j.contains("order") ? order_from_json(j.at("order")) : LabelOrder::lex();
            doc.labeling = std::make_shared<EdgeLabeling>(order, "input");
            for (const auto& [k, v] : j.at("labels").items()) {
                const auto dash = k.find('-');
                if (dash == std::string::npos) throw WhitneyError(ErrorKind::ParseError, "label key must be 'lo-hi'");
                const auto lo = std::stoul(k.substr(0, dash)), hi = std::stoul(k.substr(dash + 1));
                if (lo >= static_cast<unsigned long>(n) || hi >= static_cast<unsigned long>(n) ||
                    !doc.poset.covers(static_cast<ElementId>(lo), static_cast<ElementId>(hi)))
                    throw WhitneyError(ErrorKind::InvalidInput, "label on a non-cover " + k);
                doc.labeling->set(static_cast<ElementId>(lo), static_cast<ElementId>(hi), label_from_json(v));
            }
            doc.labeling->check_total(doc.poset);
            order.validate_on(doc.labeling->used_labels());
        }
        return doc;
    } catch (const json::exception& e) {
        throw WhitneyError(ErrorKind::ParseError, e.what());
    } catch (const std::invalid_argument& e) {
        throw WhitneyError(ErrorKind::ParseError, e.what());
    } catch (const std::out_of_range& e) {
        throw WhitneyError(ErrorKind::ParseError, e.what());
    }
}

PosetDocument read_poset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw WhitneyError(ErrorKind::ParseError, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw WhitneyError(ErrorKind::ParseError, path + ": " + e.what());
    }
    return poset_from_json(j);
}

json poset_to_json(const Poset& P, const EdgeLabeling* lab) {
    json j;
    j["n"] = P.size();
    json covers = json::array();
    for (auto [lo, hi] : P.cover_pairs()) covers.push_back({lo, hi});
    j["covers"] = covers;
    if (P.has_names()) {
        json names = json::object();
        for (ElementId x = 0; x < P.size(); ++x) names[std::to_string(x)] = P.name(x);
        j["names"] = names;
    }
    if (lab) {
        json labels = json::object();
        for (auto [lo, hi] : P.cover_pairs())
            labels[std::to_string(lo) + "-" + std::to_string(hi)] = label_to_json(lab->at(lo, hi));
        j["labels"] = labels;
        j["order"] = order_to_json(lab->order());
    }
    return j;
}

std::string poset_to_dot(const Poset& P, const EdgeLabeling* lab, const std::string& graph_name) {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << quote(graph_name) << " {\n  rankdir=BT;\n";
    for (int k = 0; k <= P.height(); ++k) {
        os << "  { rank=same;";
        for (ElementId x : P.level(k)) os << " n" << x << " [label=" << quote(P.name(x)) << "];";
        os << " }\n";
    }
    for (auto [lo, hi] : P.cover_pairs()) {
        os << "  n" << lo << " -> n" << hi;
        if (lab) os << " [label=" << quote(lab->at(lo, hi).str()) << "]";
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

json qsym_to_json(const QSymFundamental& q) {
    json coeffs = json::object();
    for (std::uint32_t m = 0; m < q.coeffs.size(); ++m)
        if (q.coeffs[m] != 0) coeffs[subset_key(m)] = q.coeffs[m];
    return {{"n", q.n}, {"coeffs", coeffs}};
}

QSymFundamental qsym_from_json(const json& j) {
    try {
        QSymFundamental q = QSymFundamental::zero(j.at("n").get<int>());
        for (const auto& [k, v] : j.at("coeffs").items()) {
            const std::uint32_t m = parse_subset_key(k);
            if (m > q.full_mask()) throw WhitneyError(ErrorKind::ParseError, "subset " + k + " exceeds the degree");
            q.coeffs[m] = v.get<long long>();
        }
        return q;
    } catch (const json::exception& e) {
        throw WhitneyError(ErrorKind::ParseError, e.what());
    }
}

json report_to_json(const VerificationReport& r, const Poset& P) {
    json j{{"property", r.property}, {"pass", r.pass}, {"skipped", r.skipped}, {"checked", r.checked}};
    if (r.counterexample) {
        const auto& ce = *r.counterexample;
        json chains = json::array();
        for (std::size_t i = 0; i < ce.chains.size(); ++i) {
            json names = json::array();
            for (ElementId x : ce.chains[i]) names.push_back(P.name(x));
            json entry{{"chain", names}};
            if (i < ce.words.size()) entry["word"] = word_str(ce.words[i]);
            chains.push_back(entry);
        }
        j["counterexample"] = {{"reason", ce.reason}, {"lo", P.name(ce.lo)}, {"hi", P.name(ce.hi)}, {"chains", chains}};
    }
    return j;
}

} // namespace whitney
