#include "rational/io.hpp"

#include <map>
#include <sstream>

#include <json.hpp>

#include "rational/errors.hpp"

namespace rational {

namespace {

using json = nlohmann::ordered_json;

std::pair<int, int> line_column(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Word parse_word_field(const json& j, const std::string& where) {
    if (!j.is_string())
        throw ParseError("expected a bit-string at " + where);
    try {
        return Word::from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " at " + where);
    }
}

} // namespace

Transducer parse_machine(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(e.what(), line, col);
    }
    if (!doc.is_object() || !doc.contains("states") || !doc.contains("initial") ||
        !doc.contains("transitions"))
        throw ParseError("machine object needs fields states, initial, transitions");
    if (!doc["states"].is_array())
        throw ParseError("states must be a list of names");
    if (doc["states"].empty())
        throw InvariantError("empty states list");

    Transducer T;
    std::map<std::string, StateId> ids;
    for (const auto& item : doc["states"]) {
        if (!item.is_string()) throw ParseError("state names must be strings");
        auto name = item.get<std::string>();
        if (ids.count(name))
            throw InvariantError("duplicate state name '" + name + "'");
        ids[name] = T.add_state(name);
    }

    auto lookup = [&](const std::string& name, const std::string& where) {
        auto it = ids.find(name);
        if (it == ids.end())
            throw InvariantError("unknown state '" + name + "' at " + where);
        return it->second;
    };

    if (!doc["initial"].is_string())
        throw ParseError("initial must be a state name");
    T.set_initial(lookup(doc["initial"].get<std::string>(), "initial"));

    if (!doc["transitions"].is_object())
        throw ParseError("transitions must be an object");
    for (const auto& [state_name, edges] : doc["transitions"].items()) {
        StateId s = lookup(state_name, "transitions");
        if (!edges.is_object())
            throw ParseError("transitions." + state_name + " must be an object");
        for (const auto& [bit_str, edge] : edges.items()) {
            if (bit_str != "0" && bit_str != "1")
                throw ParseError("bad input symbol '" + bit_str + "' at transitions." +
                                 state_name);
            int bit = bit_str[0] - '0';
            const std::string where = "transitions." + state_name + "." + bit_str;
            if (!edge.is_object() || !edge.contains("out") || !edge.contains("to"))
                throw ParseError("edge at " + where + " needs fields out, to");
            Word out = parse_word_field(edge["out"], where + ".out");
            if (!edge["to"].is_string())
                throw ParseError("expected a state name at " + where + ".to");
            StateId to = lookup(edge["to"].get<std::string>(), where + ".to");
            T.set_arc(s, bit, to, std::move(out));
        }
    }

    auto violations = validate(T);
    if (!violations.empty()) {
        std::string msg = "invalid machine:";
        for (const auto& v : violations) msg += " " + v + ";";
        msg.pop_back();
        throw InvariantError(msg);
    }
    return T;
}

std::string serialize_machine(const Transducer& T) {
    json doc;
    doc["states"] = json::array();
    for (StateId s = 0; s < T.num_states(); ++s)
        doc["states"].push_back(T.name(s));
    doc["initial"] = T.name(T.initial());
    json trans = json::object();
    for (StateId s = 0; s < T.num_states(); ++s) {
        json edges = json::object();
        for (int bit = 0; bit < 2; ++bit) {
            const Arc& a = T.arc(s, bit);
            edges[std::to_string(bit)] = {{"out", a.out.str()}, {"to", T.name(a.to)}};
        }
        trans[T.name(s)] = std::move(edges);
    }
    doc["transitions"] = std::move(trans);
    return doc.dump(2) + "\n";
}

std::string to_dot(const Transducer& T) {
    std::ostringstream os;
    os << "digraph transducer {\n";
    os << "  rankdir=LR;\n";
    os << "  node [shape=circle];\n";
    os << "  __start [shape=none, label=\"\"];\n";
    os << "  __start -> \"" << T.name(T.initial()) << "\";\n";
    for (StateId s = 0; s < T.num_states(); ++s) {
        const Arc& a0 = T.arc(s, 0);
        const Arc& a1 = T.arc(s, 1);
        auto label = [&](int bit, const Word& out) {
            return std::to_string(bit) + "|" + (out.empty() ? "ε" : out.str());
        };
        if (a0.to == a1.to) {
            os << "  \"" << T.name(s) << "\" -> \"" << T.name(a0.to)
               << "\" [label=\"" << label(0, a0.out) << "\\n" << label(1, a1.out)
               << "\"];\n";
        } else {
            os << "  \"" << T.name(s) << "\" -> \"" << T.name(a0.to)
               << "\" [label=\"" << label(0, a0.out) << "\"];\n";
            os << "  \"" << T.name(s) << "\" -> \"" << T.name(a1.to)
               << "\" [label=\"" << label(1, a1.out) << "\"];\n";
        }
    }
    os << "}\n";
    return os.str();
}

} // namespace rational
