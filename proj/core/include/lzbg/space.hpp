#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lzbg {

/// Auxiliary space of one pipeline phase, in 64-bit words.
///
/// Heap words are measured by the allocation probe (only when it is linked in);
/// fixed words are stack-resident tables declared by the algorithms themselves.
/// All figures are peaks of the accountant's live total while the phase ran, so
/// a buffer allocated in an earlier phase and still alive is included.
struct PhaseSpace {
    std::string phase;
    std::size_t peak_heap_words = 0;
    std::size_t peak_fixed_words = 0;
    std::size_t peak_words = 0; // peak of heap + fixed
};

struct SpaceReport {
    std::vector<PhaseSpace> phases;

    const PhaseSpace* find(std::string_view phase) const;
    std::size_t peak_aux_words() const;
    std::size_t peak_heap_words() const;
    std::size_t peak_fixed_words() const;
};

/// Observes allocations made on the constructing thread for its lifetime.
/// Accountants nest: constructing one hides the previous until destroyed.
class SpaceAccountant {
public:
    SpaceAccountant();
    ~SpaceAccountant();
    SpaceAccountant(const SpaceAccountant&) = delete;
    SpaceAccountant& operator=(const SpaceAccountant&) = delete;

    void begin_phase(std::string_view name);
    void end_phase();

    const SpaceReport& report() const { return report_; }
    std::size_t live_heap_words() const { return heap_words_; }
    std::size_t live_fixed_words() const { return fixed_words_; }

    // Probe and charge hooks.
    void add_heap(std::size_t words);
    void sub_heap(std::size_t words);
    void add_fixed(std::size_t words);
    void sub_fixed(std::size_t words);
    std::uint64_t tag() const { return tag_; }

    static SpaceAccountant* current();

private:
    void touch();

    SpaceAccountant* previous_;
    std::uint64_t tag_;
    SpaceReport report_;
    bool in_phase_ = false;
    std::size_t heap_words_ = 0;
    std::size_t fixed_words_ = 0;
    PhaseSpace open_;
};

/// Phase scope on the current accountant; does nothing when none is installed.
class PhaseScope {
public:
    explicit PhaseScope(std::string_view name);
    ~PhaseScope();
    PhaseScope(const PhaseScope&) = delete;
    PhaseScope& operator=(const PhaseScope&) = delete;

private:
    SpaceAccountant* acc_;
};

/// Declares `words` of stack-resident tables for the current scope.
class FixedCharge {
public:
    explicit FixedCharge(std::size_t words);
    ~FixedCharge();
    FixedCharge(const FixedCharge&) = delete;
    FixedCharge& operator=(const FixedCharge&) = delete;

private:
    SpaceAccountant* acc_;
    std::size_t words_;
};

/// Allocations made while an Uncounted is alive are not charged (used for output).
class Uncounted {
public:
    Uncounted();
    ~Uncounted();
    Uncounted(const Uncounted&) = delete;
    Uncounted& operator=(const Uncounted&) = delete;
};

/// Runs fn as a phase of acc and returns the recorded entry.
template <class Fn>
PhaseSpace track_space(std::string_view phase, SpaceAccountant& acc, Fn&& fn) {
    acc.begin_phase(phase);
    try {
        fn();
    } catch (...) {
        acc.end_phase();
        throw;
    }
    acc.end_phase();
    return acc.report().phases.back();
}

namespace space_probe {

/// True when the allocation probe object is linked into the executable.
bool installed();
void mark_installed();

/// Called by the probe for each allocation; returns the tag to store with the
/// block (0 when the allocation is not charged).
std::uint64_t on_alloc(std::size_t bytes);
void on_free(std::uint64_t tag, std::size_t bytes);

} // namespace space_probe

} // namespace lzbg
