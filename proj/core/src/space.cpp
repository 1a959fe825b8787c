#include "lzbg/space.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

namespace lzbg {

namespace {

thread_local SpaceAccountant* tl_current = nullptr;
thread_local int tl_suspended = 0;
std::atomic<std::uint64_t> g_next_tag{1};
bool g_probe_installed = false;

std::size_t bytes_to_words(std::size_t bytes) { return (bytes + 7) / 8; }

} // namespace

const PhaseSpace* SpaceReport::find(std::string_view phase) const {
    for (const auto& p : phases)
        if (p.phase == phase) return &p;
    return nullptr;
}

std::size_t SpaceReport::peak_aux_words() const {
    std::size_t m = 0;
    for (const auto& p : phases) m = std::max(m, p.peak_words);
    return m;
}

std::size_t SpaceReport::peak_heap_words() const {
    std::size_t m = 0;
    for (const auto& p : phases) m = std::max(m, p.peak_heap_words);
    return m;
}

std::size_t SpaceReport::peak_fixed_words() const {
    std::size_t m = 0;
    for (const auto& p : phases) m = std::max(m, p.peak_fixed_words);
    return m;
}

SpaceAccountant::SpaceAccountant()
    : previous_(tl_current), tag_(g_next_tag.fetch_add(1, std::memory_order_relaxed)) {
    Uncounted quiet;
    report_.phases.reserve(8);
    tl_current = this;
}

SpaceAccountant::~SpaceAccountant() {
    if (tl_current == this) tl_current = previous_;
}

SpaceAccountant* SpaceAccountant::current() { return tl_current; }

void SpaceAccountant::begin_phase(std::string_view name) {
    Uncounted quiet;
    if (in_phase_) end_phase();
    open_ = PhaseSpace{};
    open_.phase.assign(name);
    in_phase_ = true;
    touch();
}

void SpaceAccountant::end_phase() {
    if (!in_phase_) return;
    Uncounted quiet;
    in_phase_ = false;
    report_.phases.push_back(std::move(open_));
    open_ = PhaseSpace{};
}

void SpaceAccountant::touch() {
    if (!in_phase_) return;
    open_.peak_heap_words = std::max(open_.peak_heap_words, heap_words_);
    open_.peak_fixed_words = std::max(open_.peak_fixed_words, fixed_words_);
    open_.peak_words = std::max(open_.peak_words, heap_words_ + fixed_words_);
}

void SpaceAccountant::add_heap(std::size_t words) {
    heap_words_ += words;
    touch();
}

void SpaceAccountant::sub_heap(std::size_t words) {
    heap_words_ -= std::min(words, heap_words_);
}

void SpaceAccountant::add_fixed(std::size_t words) {
    fixed_words_ += words;
    touch();
}

void SpaceAccountant::sub_fixed(std::size_t words) {
    fixed_words_ -= std::min(words, fixed_words_);
}

PhaseScope::PhaseScope(std::string_view name) : acc_(tl_current) {
    if (acc_) acc_->begin_phase(name);
}

PhaseScope::~PhaseScope() {
    if (acc_) acc_->end_phase();
}

FixedCharge::FixedCharge(std::size_t words) : acc_(tl_current), words_(words) {
    if (acc_) acc_->add_fixed(words_);
}

FixedCharge::~FixedCharge() {
    if (acc_) acc_->sub_fixed(words_);
}

Uncounted::Uncounted() { ++tl_suspended; }
Uncounted::~Uncounted() { --tl_suspended; }

namespace space_probe {

bool installed() { return g_probe_installed; }
void mark_installed() { g_probe_installed = true; }

std::uint64_t on_alloc(std::size_t bytes) {
    SpaceAccountant* acc = tl_current;
    if (acc == nullptr || tl_suspended != 0) return 0;
    acc->add_heap(bytes_to_words(bytes));
    return acc->tag();
}

void on_free(std::uint64_t tag, std::size_t bytes) {
    if (tag == 0) return;
    SpaceAccountant* acc = tl_current;
    if (acc != nullptr && acc->tag() == tag) acc->sub_heap(bytes_to_words(bytes));
}

} // namespace space_probe

} // namespace lzbg
