#include "saci/logging.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace saci {

LogLevel log_level() {
    static LogLevel level = [] {
        const char* env = std::getenv("SACI_LOG");
        if (env == nullptr) return LogLevel::warn;
        if (std::strcmp(env, "quiet") == 0) return LogLevel::quiet;
        if (std::strcmp(env, "info") == 0) return LogLevel::info;
        if (std::strcmp(env, "debug") == 0) return LogLevel::debug;
        return LogLevel::warn;
    }();
    return level;
}

namespace {
void emit(const char* tag, const std::string& message) {
    std::fprintf(stderr, "saci: %s: %s\n", tag, message.c_str());
}
}  // namespace

void log_warn(const std::string& message) {
    if (log_level() >= LogLevel::warn) emit("warning", message);
}

void log_info(const std::string& message) {
    if (log_level() >= LogLevel::info) emit("info", message);
}

void log_debug(const std::string& message) {
    if (log_level() >= LogLevel::debug) emit("debug", message);
}

}  // namespace saci
