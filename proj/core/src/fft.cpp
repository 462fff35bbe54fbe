#include "fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace planch::detail {

namespace {

// Plans are created once per (size, sign) with FFTW_ESTIMATE | FFTW_UNALIGNED
// and executed through the new-array interface, so results are deterministic
// for a fixed build and any caller-supplied buffer alignment is acceptable.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    void execute(std::vector<cplx>& data, int sign) {
        fftw_plan plan = nullptr;
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto key = std::make_pair(data.size(), sign);
            auto it = plans_.find(key);
            if (it == plans_.end()) {
                std::vector<cplx> scratch(data.size());
                auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
                plan = fftw_plan_dft_1d(int(data.size()), ptr, ptr, sign,
                                        FFTW_ESTIMATE | FFTW_UNALIGNED);
                plans_.emplace(key, plan);
            } else {
                plan = it->second;
            }
        }
        auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
        fftw_execute_dft(plan, ptr, ptr);
    }

private:
    PlanCache() = default;
    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

}  // namespace

void fft_forward(std::vector<cplx>& data) {
    PlanCache::instance().execute(data, FFTW_FORWARD);
}

void fft_backward(std::vector<cplx>& data) {
    PlanCache::instance().execute(data, FFTW_BACKWARD);
}

std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

}  // namespace planch::detail
