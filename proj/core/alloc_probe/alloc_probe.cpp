// Replaces the global allocation functions so that SpaceAccountant can see heap
// traffic. Link this object into an executable to enable heap measurement.

#include "lzbg/space.hpp"

#include <cstdint>
#include <cstdlib>
#include <new>

namespace {

constexpr std::size_t kHeader = 16;

struct Header {
    std::size_t size;
    std::uint64_t tag;
};
static_assert(sizeof(Header) <= kHeader);

void* probe_alloc(std::size_t size) noexcept {
    auto* raw = static_cast<unsigned char*>(std::malloc(size + kHeader));
    if (raw == nullptr) return nullptr;
    auto* h = reinterpret_cast<Header*>(raw);
    h->size = size;
    h->tag = lzbg::space_probe::on_alloc(size);
    return raw + kHeader;
}

void probe_free(void* p) noexcept {
    if (p == nullptr) return;
    auto* raw = static_cast<unsigned char*>(p) - kHeader;
    auto* h = reinterpret_cast<Header*>(raw);
    lzbg::space_probe::on_free(h->tag, h->size);
    std::free(raw);
}

void* probe_alloc_or_throw(std::size_t size) {
    for (;;) {
        if (void* p = probe_alloc(size)) return p;
        std::new_handler handler = std::get_new_handler();
        if (handler == nullptr) throw std::bad_alloc();
        handler();
    }
}

struct Installer {
    Installer() { lzbg::space_probe::mark_installed(); }
} installer;

} // namespace

void* operator new(std::size_t size) { return probe_alloc_or_throw(size); }
void* operator new[](std::size_t size) { return probe_alloc_or_throw(size); }
void* operator new(std::size_t size, const std::nothrow_t&) noexcept { return probe_alloc(size); }
void* operator new[](std::size_t size, const std::nothrow_t&) noexcept { return probe_alloc(size); }

void operator delete(void* p) noexcept { probe_free(p); }
void operator delete[](void* p) noexcept { probe_free(p); }
void operator delete(void* p, std::size_t) noexcept { probe_free(p); }
void operator delete[](void* p, std::size_t) noexcept { probe_free(p); }
void operator delete(void* p, const std::nothrow_t&) noexcept { probe_free(p); }
void operator delete[](void* p, const std::nothrow_t&) noexcept { probe_free(p); }
