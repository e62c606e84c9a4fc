#include "chroma/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace chroma {

namespace {

int from_environment() {
  const char* raw = std::getenv("CHROMA_THREADS");
  if (raw == nullptr) return 1;
  try {
    return std::max(1, std::stoi(raw));
  } catch (const std::exception&) {
    return 1;
  }
}

std::atomic<int>& override_slot() {
  static std::atomic<int> slot{0};
  return slot;
}

}  // namespace

int thread_count() {
  const int forced = override_slot().load();
  if (forced > 0) return forced;
  static const int env = from_environment();
  return env;
}

void set_thread_count(int threads) { override_slot().store(std::max(1, threads)); }

}  // namespace chroma
