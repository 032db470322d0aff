#pragma once

#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace aeg {

// Anything traceable to bad user input: malformed files, config violations,
// out-of-vocabulary words. The CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(const void* data, std::size_t len);
std::uint64_t fnv1a64(const std::string& s);

// Counter-based pseudo-random stream (splitmix64 finalizer over key+counter).
// The same (key, counter) always yields the same value; independent streams
// are forked by label. All randomness in the project flows from one seed
// through forks of this generator.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t key) : key_(key) {}

    CounterRng fork(std::uint64_t label) const;
    CounterRng fork(const std::string& label) const;

    std::uint64_t next_u64();
    // in [0, 1)
    double next_double();
    double next_uniform(double lo, double hi);
    // in [0, n)
    std::uint64_t next_below(std::uint64_t n);
    int next_int(int lo, int hi_inclusive);

    template <typename T>
    void shuffle(std::vector<T>& v) {
        if (v.size() < 2) return;
        for (std::size_t i = v.size() - 1; i > 0; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i + 1));
            std::swap(v[i], v[j]);
        }
    }

    // k distinct values from [0, n), order randomized
    std::vector<int> sample_distinct(int n, int k);

private:
    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

// Little-endian scalar encoding for the binary file formats.
void append_u32le(std::string& out, std::uint32_t v);
void append_f32le(std::string& out, float v);
void append_f64le(std::string& out, double v);
std::uint32_t read_u32le(const unsigned char* p);
float read_f32le(const unsigned char* p);
double read_f64le(const unsigned char* p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Runs fn(0..n-1) across a small thread pool. Each index writes only its own
// output slot, so results are deterministic regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace aeg
