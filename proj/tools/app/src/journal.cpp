#include "mmm_app/journal.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <mmm/json_io.hpp>

namespace mmm::app {

namespace {

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::string config_hash(const SweepConfig& cfg) {
    const Json canonical{{"seed", to_json(cfg.seed)},
                         {"direction", to_string(cfg.direction)},
                         {"eps0", to_json(cfg.eps0)},
                         {"eps_shrink", cfg.eps_shrink},
                         {"eps_floor", to_json(cfg.eps_floor)},
                         {"eps_restart", to_string(cfg.eps_restart)},
                         {"threshold", cfg.limit.threshold()}};
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canonical.dump())));
    return buf;
}

void write_journal(const std::filesystem::path& path, const JournalRecord& rec) {
    const Json j{{"config_hash", rec.config_hash}, {"offset", rec.offset}, {"state", to_json(rec.state)}};
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write journal " + tmp.string());
        out << j.dump() << '\n';
        out.flush();
        if (!out) throw std::runtime_error("cannot write journal " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::optional<JournalRecord> read_journal(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        const Json j = Json::parse(buf.str());
        return JournalRecord{j.at("config_hash").get<std::string>(), sweep_state_from_json(j.at("state")),
                             j.at("offset").get<std::uint64_t>()};
    } catch (const std::exception& e) {
        throw std::runtime_error("unreadable journal " + path.string() + ": " + e.what());
    }
}

std::filesystem::path journal_path_for(const std::filesystem::path& pieces) {
    std::filesystem::path p = pieces;
    p += ".journal";
    return p;
}

}  // namespace mmm::app
