// space.cpp

#include "recoil/space.hpp"

#include "recoil/errors.hpp"

namespace recoil {

SpaceDescriptor make_space(bool emitter, int motional_cutoff,
                           const std::vector<int>& cavity_cutoffs) {
    if (motional_cutoff < 1)
        throw InvalidArgument("motional cutoff must be >= 1, got " +
                              std::to_string(motional_cutoff));
    if (cavity_cutoffs.size() > 2)
        throw InvalidArgument("at most two cavity modes are supported");
    SpaceDescriptor sp;
    if (emitter) {
        sp.dims.push_back(2);
        sp.labels.push_back("emitter");
    }
    sp.dims.push_back(motional_cutoff + 1);
    sp.labels.push_back("motion");
    for (size_t i = 0; i < cavity_cutoffs.size(); ++i) {
        if (cavity_cutoffs[i] < 1)
            throw InvalidArgument("cavity cutoff must be >= 1, got " +
                                  std::to_string(cavity_cutoffs[i]));
        sp.dims.push_back(cavity_cutoffs[i] + 1);
        sp.labels.push_back("cavity" + std::to_string(i + 1));
    }
    return sp;
}

SpaceDescriptor motional_space(int cutoff) { return make_space(false, cutoff); }

}  // namespace recoil
