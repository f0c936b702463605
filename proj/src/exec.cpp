#include "chemofront/exec.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <mutex>
#include <thread>
#include <vector>

namespace chemofront::exec {

namespace {

int g_threads = []() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 16u));
}();

// Persistent worker pool. Workers sleep on a condition variable and wake per
// job; the caller participates as band 0 and waits on a completion counter.
class Pool {
public:
    explicit Pool(int workers) : stop_(false), pending_(0) {
        for (int w = 0; w < workers; ++w) {
            threads_.emplace_back([this, w] { worker_loop(w + 1); });
        }
    }

    ~Pool() {
        {
            std::lock_guard lk(mu_);
            stop_ = true;
        }
        cv_.notify_all();
        for (auto& t : threads_) t.join();
    }

    int bands() const { return static_cast<int>(threads_.size()) + 1; }

    void run(int nrows, const std::function<void(int, int)>& fn) {
        const int nb = bands();
        {
            std::lock_guard lk(mu_);
            job_ = &fn;
            rows_ = nrows;
            pending_ = nb - 1;
            ++generation_;
        }
        cv_.notify_all();
        run_band(0, nrows, nb, fn);
        std::unique_lock lk(mu_);
        done_cv_.wait(lk, [this] { return pending_ == 0; });
    }

private:
    static void run_band(int band, int nrows, int nbands,
                         const std::function<void(int, int)>& fn) {
        const int j0 = static_cast<int>(static_cast<long>(nrows) * band / nbands);
        const int j1 = static_cast<int>(static_cast<long>(nrows) * (band + 1) / nbands);
        if (j0 < j1) fn(j0, j1);
    }

    void worker_loop(int band) {
        std::uint64_t seen = 0;
        for (;;) {
            const std::function<void(int, int)>* job;
            int rows;
            {
                std::unique_lock lk(mu_);
                cv_.wait(lk, [&] { return stop_ || generation_ != seen; });
                if (stop_) return;
                seen = generation_;
                job = job_;
                rows = rows_;
            }
            run_band(band, rows, bands(), *job);
            {
                std::lock_guard lk(mu_);
                if (--pending_ == 0) done_cv_.notify_all();
            }
        }
    }

    std::vector<std::thread> threads_;
    std::mutex mu_;
    std::condition_variable cv_, done_cv_;
    const std::function<void(int, int)>* job_ = nullptr;
    int rows_ = 0;
    bool stop_;
    int pending_;
    std::uint64_t generation_ = 0;
};

Pool* g_pool = nullptr;

}  // namespace

void set_threads(int n) {
    n = std::clamp(n, 1, 64);
    if (n == g_threads && (g_pool || n == 1)) {
        g_threads = n;
        return;
    }
    delete g_pool;
    g_pool = nullptr;
    g_threads = n;
}

int threads() { return g_threads; }

void parallel_rows(int nrows, const std::function<void(int, int)>& fn) {
    if (g_threads == 1 || nrows < 2) {
        fn(0, nrows);
        return;
    }
    if (!g_pool || g_pool->bands() != g_threads) {
        delete g_pool;
        g_pool = new Pool(g_threads - 1);
    }
    g_pool->run(nrows, fn);
}

}  // namespace chemofront::exec
