#include "motivic/table.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "motivic/error.hpp"
#include "motivic/expr.hpp"

namespace motivic {

namespace {

constexpr const char* kMagic = "motivic-milnor-constants";
constexpr const char* kVersion = "v1";

std::string basis_key(const OpBasis& b) { return b.e().as_seq().str() + "|" + b.r().str(); }

OpBasis parse_basis_key(const std::string& text, std::size_t line_no) {
    std::size_t bar = text.find('|');
    if (bar == std::string::npos)
        throw CorruptTable("line " + std::to_string(line_no) + ": basis key lacks '|'");
    try {
        Seq e = parse_seq(text.substr(0, bar));
        Seq r = parse_seq(text.substr(bar + 1));
        return OpBasis(SeqE(e), r);
    } catch (const Error& e) {
        throw CorruptTable("line " + std::to_string(line_no) + ": bad basis key '" + text +
                           "': " + e.what());
    }
}

}  // namespace

ConstantsTable constants_table(std::int64_t max_p) {
    ConstantsTable out;
    out.max_p = max_p;
    std::vector<OpBasis> basis = basis_up_to(max_p);
    for (const OpBasis& a : basis)
        for (const OpBasis& b : basis)
            out.entries.emplace(std::pair{a, b}, qp_mul_basis(a.e(), a.r(), b.e(), b.r()));
    return out;
}

void save_table(const ConstantsTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IOFailure("cannot open '" + path + "' for writing");
    out << kMagic << " " << kVersion << " maxp=" << table.max_p << "\n";
    for (const auto& [key, value] : table.entries)
        out << basis_key(key.first) << "*" << basis_key(key.second) << " := "
            << print(value, Format::text) << "\n";
    out.flush();
    if (!out) throw IOFailure("failed while writing '" + path + "'");
}

ConstantsTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IOFailure("cannot open '" + path + "' for reading");

    std::string header;
    if (!std::getline(in, header)) throw VersionMismatch("empty constants table");
    {
        std::istringstream hs(header);
        std::string magic, version, maxp;
        hs >> magic >> version >> maxp;
        if (magic != kMagic || version != kVersion)
            throw VersionMismatch("unrecognized header '" + header + "'");
        if (maxp.rfind("maxp=", 0) != 0)
            throw VersionMismatch("header lacks maxp field: '" + header + "'");
    }

    ConstantsTable table;
    try {
        table.max_p = std::stoll(header.substr(header.find("maxp=") + 5));
    } catch (const std::exception&) {
        throw VersionMismatch("unreadable maxp in header '" + header + "'");
    }

    std::string line;
    std::size_t line_no = 1;
    std::size_t index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::size_t sep = line.find(" := ");
        if (sep == std::string::npos)
            throw CorruptTable("line " + std::to_string(line_no) + ": missing ' := '");
        std::string key_text = line.substr(0, sep);
        std::string value_text = line.substr(sep + 4);

        std::size_t star = key_text.find('*');
        if (star == std::string::npos)
            throw CorruptTable("line " + std::to_string(line_no) + ": key lacks '*'");
        OpBasis left = parse_basis_key(key_text.substr(0, star), line_no);
        OpBasis right = parse_basis_key(key_text.substr(star + 1), line_no);

        OpElement value;
        try {
            value = eval_text(value_text);
        } catch (const Error& e) {
            throw CorruptTable("line " + std::to_string(line_no) + ": bad value: " + e.what());
        }

        if (index % 100 == 0) {
            OpElement fresh = qp_mul_basis(left.e(), left.r(), right.e(), right.r());
            if (fresh != value)
                throw CorruptTable("line " + std::to_string(line_no) +
                                   ": stored product disagrees with recomputation for " +
                                   key_text);
        }
        ++index;

        if (!table.entries.emplace(std::pair{left, right}, std::move(value)).second)
            throw CorruptTable("line " + std::to_string(line_no) + ": duplicate key " + key_text);
    }
    if (in.bad()) throw IOFailure("failed while reading '" + path + "'");
    return table;
}

}  // namespace motivic
