#include "ordwalk/export.hpp"

#include <json.hpp>

#include <sstream>

namespace ordwalk {

namespace {

using json = nlohmann::ordered_json;

json tuple_json(const OrdTuple& t) {
    json a = json::array();
    for (const auto& o : t) a.push_back(o.str());
    return a;
}

void collect_json(const WalkNode& node, const std::string& sigma, json& nodes) {
    json rec;
    rec["in_sign"] = node.in_sign;
    rec["in"] = tuple_json(node.in);
    if (node.boundary) {
        rec["boundary"] = true;
    } else {
        rec["out_sign"] = node.out_sign;
        rec["out"] = node.out.str();
        json kids = json::array();
        for (std::size_t k = 0; k < node.kids.size(); ++k)
            kids.push_back(sigma + static_cast<char>('0' + k));
        rec["children"] = kids;
    }
    nodes[sigma] = std::move(rec);
    for (std::size_t k = 0; k < node.kids.size(); ++k)
        collect_json(node.kids[k], sigma + static_cast<char>('0' + k), nodes);
}

std::string sign_str(int s) {
    return s >= 0 ? "+" : "-";
}

void collect_dot(const WalkNode& node, const std::string& sigma, std::ostringstream& out) {
    static const char* styles[] = {"solid", "dashed", "dotted"};
    out << "  \"n" << sigma << "\" [label=\"{" << sign_str(node.in_sign) << tuple_str(node.in)
        << "|";
    if (node.boundary)
        out << "x";
    else
        out << sign_str(node.out_sign) << node.out.str();
    out << "}\"];\n";
    for (std::size_t k = 0; k < node.kids.size(); ++k) {
        std::string child = sigma + static_cast<char>('0' + k);
        out << "  \"n" << sigma << "\" -> \"n" << child << "\" [label=\"" << k << "\", style="
            << styles[k % 3] << "];\n";
        collect_dot(node.kids[k], child, out);
    }
}

void collect_ascii(const WalkNode& node, const std::string& sigma, std::ostringstream& out) {
    for (std::size_t i = 0; i < sigma.size(); ++i) out << "  ";
    out << (sigma.empty() ? "." : sigma) << " " << sign_str(node.in_sign) << tuple_str(node.in)
        << " / ";
    if (node.boundary)
        out << "x";
    else
        out << sign_str(node.out_sign) << node.out.str();
    out << "\n";
    for (std::size_t k = 0; k < node.kids.size(); ++k)
        collect_ascii(node.kids[k], sigma + static_cast<char>('0' + k), out);
}

} // namespace

std::string tree_json(const WalkTree& tree) {
    json doc;
    doc["n"] = tree.n;
    doc["root"] = "";
    json nodes = json::object();
    collect_json(tree.root, "", nodes);
    doc["nodes"] = std::move(nodes);
    return doc.dump();
}

std::string tree_dot(const WalkTree& tree) {
    std::ostringstream out;
    out << "digraph walk {\n  node [shape=record, fontname=\"monospace\"];\n";
    collect_dot(tree.root, "", out);
    out << "}\n";
    return out.str();
}

std::string tree_ascii(const WalkTree& tree) {
    std::ostringstream out;
    collect_ascii(tree.root, "", out);
    return out.str();
}

std::string walk_json(const WalkTrace& t, long long rho2_value,
                      std::optional<long long> rho1_value) {
    json doc;
    json steps = json::array();
    for (const auto& o : t.steps) steps.push_back(o.str());
    json lower = json::array();
    for (const auto& o : t.lower) lower.push_back(o.str());
    doc["steps"] = std::move(steps);
    doc["lower"] = std::move(lower);
    doc["rho2"] = rho2_value;
    if (rho1_value) doc["rho1"] = *rho1_value;
    return doc.dump();
}

} // namespace ordwalk
