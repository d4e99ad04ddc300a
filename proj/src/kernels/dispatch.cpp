#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "backends.hpp"

namespace dea::kernels {
namespace {

const Ops* ops_for(Backend b) {
    switch (b) {
    case Backend::scalar:
        return &scalar_ops();
    case Backend::avx2:
#if defined(__x86_64__) || defined(__amd64__)
        return avx2_available() ? &avx2_ops() : nullptr;
#else
        return nullptr;
#endif
    case Backend::neon:
#if defined(__aarch64__)
        return &neon_ops();
#else
        return nullptr;
#endif
    }
    return nullptr;
}

Backend widest_supported() {
#if defined(__x86_64__) || defined(__amd64__)
    if (avx2_available()) {
        return Backend::avx2;
    }
#elif defined(__aarch64__)
    return Backend::neon;
#endif
    return Backend::scalar;
}

bool parse_backend(const char* s, Backend& out) {
    if (std::strcmp(s, "scalar") == 0) {
        out = Backend::scalar;
    } else if (std::strcmp(s, "avx2") == 0) {
        out = Backend::avx2;
    } else if (std::strcmp(s, "neon") == 0) {
        out = Backend::neon;
    } else {
        return false;
    }
    return true;
}

const Ops* initial_ops() {
    if (const char* env = std::getenv("DEA_KERNELS")) {
        Backend b;
        if (parse_backend(env, b)) {
            if (const Ops* ops = ops_for(b)) {
                return ops;
            }
            std::fprintf(stderr, "dea: DEA_KERNELS=%s not supported on this CPU, using auto selection\n", env);
        } else {
            std::fprintf(stderr, "dea: unknown DEA_KERNELS value '%s', using auto selection\n", env);
        }
    }
    return ops_for(widest_supported());
}

std::atomic<const Ops*>& active_slot() {
    static std::atomic<const Ops*> slot{initial_ops()};
    return slot;
}

} // namespace

const Ops& active() {
    return *active_slot().load(std::memory_order_relaxed);
}

Backend active_backend() {
    const Ops* ops = &active();
#if defined(__x86_64__) || defined(__amd64__)
    if (avx2_available() && ops == &avx2_ops()) {
        return Backend::avx2;
    }
#endif
#if defined(__aarch64__)
    if (ops == &neon_ops()) {
        return Backend::neon;
    }
#endif
    return Backend::scalar;
}

bool select(Backend b) {
    if (const Ops* ops = ops_for(b)) {
        active_slot().store(ops, std::memory_order_relaxed);
        return true;
    }
    return false;
}

bool supported(Backend b) {
    return ops_for(b) != nullptr;
}

std::vector<Backend> supported_backends() {
    std::vector<Backend> out;
    for (Backend b : {Backend::scalar, Backend::avx2, Backend::neon}) {
        if (supported(b)) {
            out.push_back(b);
        }
    }
    return out;
}

std::string_view name(Backend b) {
    switch (b) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    case Backend::neon:
        return "neon";
    }
    return "unknown";
}

} // namespace dea::kernels
