#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "panelopt/batch_pipeline.hpp"
#include "panelopt/bench_sweep.hpp"
#include "panelopt/worker_pool.hpp"

using namespace panelopt;

TEST_CASE("partition covers the range contiguously") {
    for (std::size_t m : {1u, 7u, 100u, 401u}) {
        for (std::size_t k : {1u, 3u, 5u, 20u}) {
            if (k > m) continue;
            const auto parts = partition(m, k);
            REQUIRE(parts.size() == k);
            std::size_t next = 0;
            std::size_t lo = m, hi = 0;
            for (const auto& p : parts) {
                CHECK(p.first == next);
                next += p.count;
                lo = std::min(lo, p.count);
                hi = std::max(hi, p.count);
            }
            CHECK(next == m);
            CHECK(hi - lo <= 1);
        }
    }
}

TEST_CASE("worker pool runs every index once and propagates errors") {
    for (std::size_t workers : {1u, 3u}) {
        WorkerPool pool(workers);
        CHECK(pool.size() == workers);
        std::vector<int> hits(1000, 0);
        pool.parallel_for(hits.size(), [&](std::size_t i) { ++hits[i]; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        CHECK_THROWS_AS(pool.parallel_for(10, [](std::size_t i) {
            if (i == 4) throw std::runtime_error("boom");
        }),
                        std::runtime_error);
        pool.parallel_for(0, [](std::size_t) { FAIL("no work expected"); });
        // Still usable after an exception.
        std::atomic<int> count{0};
        pool.parallel_for(50, [&](std::size_t) { ++count; });
        CHECK(count == 50);
    }
}

TEST_CASE("bounded queue") {
    BoundedQueue<int> q(2);
    CHECK(q.push(1));
    CHECK(q.push(2));
    std::thread producer([&] {
        CHECK(q.push(3));  // blocks until a slot frees
        q.close();
    });
    CHECK(*q.pop() == 1);
    CHECK(*q.pop() == 2);
    CHECK(*q.pop() == 3);
    producer.join();
    CHECK_FALSE(q.pop().has_value());
    CHECK_FALSE(q.push(4));
}

TEST_CASE("all modes agree bit for bit") {
    const Workload w = jittered_naca_workload(40, 60, 11);
    const auto seq = run_sequential(w, 1);
    REQUIRE(seq.results.size() == w.size());
    for (const auto& r : seq.results) CHECK(r.ok());

    for (std::size_t slices : {1u, 3u, 7u, 40u}) {
        PipelineConfig cfg;
        cfg.num_slices = slices;
        cfg.assembly_workers = 2;
        cfg.solver_workers = 2;
        const auto run = run_pipelined(w, cfg);
        CHECK(run.results == seq.results);
        CHECK(run.timing.slices == slices);
        CHECK(run.timing.overhead >= 0.0);
        CHECK(run.timing.slice_log.size() == slices);
    }
    for (double split : {0.01, 0.5, 0.75, 1.0}) {
        PipelineConfig cfg;
        cfg.num_slices = 4;
        cfg.split_fraction = split;
        cfg.secondary_workers = 2;
        const auto run = run_split(w, cfg);
        CHECK(run.results == seq.results);
        CHECK(run.timing.mode == "split");
    }
    const auto threaded = run_sequential(w, 3);
    CHECK(threaded.results == seq.results);
}

TEST_CASE("modeled bandwidth slows transfer") {
    const Workload w = jittered_naca_workload(6, 40, 3);
    PipelineConfig cfg;
    cfg.num_slices = 3;
    // 6 systems of 40x40 doubles plus rhs: about 78 kB, so ~40 ms at 2 MB/s.
    cfg.transfer_bytes_per_sec = 2e6;
    const auto run = run_pipelined(w, cfg);
    CHECK(run.timing.transfer >= 0.035);
    CHECK(run.timing.wall >= run.timing.transfer);
}

TEST_CASE("failures stay with their problem") {
    Workload w = jittered_naca_workload(5, 40, 5);
    // An incidence beyond 90 degrees is rejected during assembly.
    w[2].flow.alpha = 3.0;
    PipelineConfig cfg;
    cfg.num_slices = 2;
    const auto run = run_pipelined(w, cfg);
    REQUIRE(run.results.size() == 5);
    CHECK_FALSE(run.results[2].ok());
    CHECK(run.results[2].status == ErrorCode::InvalidArgument);
    CHECK_FALSE(run.results[2].analysis.has_value());
    for (std::size_t i : {0u, 1u, 3u, 4u}) CHECK(run.results[i].ok());
    CHECK(run_sequential(w, 1).results == run.results);
}

TEST_CASE("configuration errors") {
    const Workload empty;
    PipelineConfig cfg;
    try {
        run_pipelined(empty, cfg);
        FAIL("expected EmptyWorkload");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptyWorkload);
    }
    CHECK_THROWS_AS(run_sequential(empty, 1), Error);
    const Workload w = jittered_naca_workload(3, 20, 1);
    cfg.num_slices = 4;
    CHECK_THROWS_AS(run_pipelined(w, cfg), Error);
    cfg.num_slices = 0;
    CHECK_THROWS_AS(run_pipelined(w, cfg), Error);
    cfg.num_slices = 1;
    cfg.split_fraction = 1.5;
    CHECK_THROWS_AS(run_split(w, cfg), Error);
}

TEST_CASE("bench sweep rows") {
    const Workload w = jittered_naca_workload(12, 40, 2);
    const std::vector<std::size_t> slices{1, 4};
    const std::vector<double> splits{0.75};
    PipelineConfig base;
    base.num_slices = 4;
    const auto rows = bench_sweep(w, slices, splits, 3, base);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].mode == "sequential");
    CHECK(rows[0].speedup == 1.0);
    CHECK(rows[1].mode == "pipelined");
    CHECK(rows[1].slices == 1);
    CHECK(rows[2].slices == 4);
    CHECK(rows[3].mode == "split");
    CHECK(rows[3].split == 0.75);
    for (const auto& r : rows) {
        CHECK(r.overhead >= 0.0);
        CHECK(r.wall > 0.0);
    }
}

TEST_CASE("jittered workload is deterministic") {
    const auto a = jittered_naca_workload(5, 20, 9);
    const auto b = jittered_naca_workload(5, 20, 9);
    const auto c = jittered_naca_workload(5, 20, 10);
    for (std::size_t i = 0; i < 5; ++i) {
        CHECK(a[i].airfoil.points() == b[i].airfoil.points());
        CHECK(a[i].flow.alpha == b[i].flow.alpha);
    }
    CHECK_FALSE(a[0].airfoil.points() == c[0].airfoil.points());
}
