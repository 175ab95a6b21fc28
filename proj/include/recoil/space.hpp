// space.hpp — truncated tensor-product space descriptors

#pragma once

#include <string>
#include <vector>

namespace recoil {

// Fixed subsystem ordering: emitter (dim 2) first when present, then the
// motional mode, then up to two cavity modes.
struct SpaceDescriptor {
    std::vector<int> dims;
    std::vector<std::string> labels;

    int total_dim() const {
        int d = 1;
        for (int s : dims) d *= s;
        return d;
    }
    int n_subsystems() const { return static_cast<int>(dims.size()); }
    bool has_emitter() const { return !labels.empty() && labels.front() == "emitter"; }
    // Index of a labeled slot, -1 if absent.
    int slot(const std::string& label) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == label) return static_cast<int>(i);
        return -1;
    }
    int motional_slot() const { return slot("motion"); }
    std::vector<int> cavity_slots() const {
        std::vector<int> out;
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i].rfind("cavity", 0) == 0) out.push_back(static_cast<int>(i));
        return out;
    }
    bool operator==(const SpaceDescriptor&) const = default;
};

// emitter=true prepends the two-level subsystem. motional_cutoff is the
// highest retained Fock index (dimension cutoff+1); every cavity cutoff
// likewise.
SpaceDescriptor make_space(bool emitter, int motional_cutoff,
                           const std::vector<int>& cavity_cutoffs = {});

// Single-mode space for reduced motional states.
SpaceDescriptor motional_space(int cutoff);

}  // namespace recoil
