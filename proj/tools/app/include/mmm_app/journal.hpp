#pragma once

// Crash-safe sweep journal.
//
// After each batch of pieces is flushed to the piece file, the journal is
// replaced atomically (write to a temporary, then rename) with the sweep
// state and the byte length of the piece file at that moment. A resumed
// sweep truncates the piece file back to that length, so a crash between the
// two writes loses nothing and duplicates nothing.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include <mmm/certifier.hpp>

namespace mmm::app {

struct JournalRecord {
    std::string config_hash;
    SweepState state;
    std::uint64_t offset = 0;
};

/// Hash over everything that shapes the piece stream: seed, direction, eps
/// schedule, threshold. Stop rules and oracle sampling are left out so a
/// finished sweep can be extended.
std::string config_hash(const SweepConfig& cfg);

void write_journal(const std::filesystem::path& path, const JournalRecord& rec);
/// nullopt when the file does not exist; throws std::runtime_error when it
/// exists but cannot be parsed.
std::optional<JournalRecord> read_journal(const std::filesystem::path& path);

/// Default journal location for a piece file.
std::filesystem::path journal_path_for(const std::filesystem::path& pieces);

}  // namespace mmm::app
