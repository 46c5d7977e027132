#ifndef DYNMATCH_STEP_TASK_HPP_
#define DYNMATCH_STEP_TASK_HPP_

#include <coroutine>
#include <cstdint>
#include <exception>
#include <limits>
#include <optional>
#include <utility>

namespace dynmatch {

/// Yielded by a StepTask coroutine once per unit of work, before doing it.
struct Step {};
inline constexpr Step kStep{};

/// Return type for step tasks that produce nothing.
struct Unit {};

inline constexpr std::uint64_t kUnboundedSteps = std::numeric_limits<std::uint64_t>::max();

namespace detail {

struct TaskPromiseBase {
    TaskPromiseBase() noexcept : root(this) {}

    // Set on every task; for a root task it points at itself.
    TaskPromiseBase* root;
    // Parent awaiting this task, if nested.
    std::coroutine_handle<> continuation;
    // Root only: innermost coroutine to resume next and the step tally.
    std::coroutine_handle<> leaf;
    std::uint64_t steps = 0;
    std::exception_ptr error;

    std::suspend_always initial_suspend() noexcept { return {}; }

    std::suspend_always yield_value(Step) noexcept {
        ++root->steps;
        return {};
    }

    void unhandled_exception() noexcept { error = std::current_exception(); }

    struct FinalAwaiter {
        bool await_ready() noexcept { return false; }

        template <class P>
        std::coroutine_handle<> await_suspend(std::coroutine_handle<P> h) noexcept {
            auto& p = h.promise();
            if (p.continuation) {
                p.root->leaf = p.continuation;
                return p.continuation;
            }
            return std::noop_coroutine();
        }

        void await_resume() noexcept {}
    };

    FinalAwaiter final_suspend() noexcept { return {}; }
};

}  // namespace detail

/// A resumable computation that reports its work as discrete steps.
///
/// The body is a coroutine that does `co_yield kStep;` before every unit of
/// work and may `co_await` other StepTasks; nested yields count against the
/// outermost task. process_steps(n) advances the computation by at most n
/// steps, so a caller can spread one static call over many updates and still
/// get the same result as running it to completion in one go.
template <class T>
class [[nodiscard]] StepTask {
public:
    struct promise_type : detail::TaskPromiseBase {
        std::optional<T> value;

        StepTask get_return_object() noexcept {
            auto h = std::coroutine_handle<promise_type>::from_promise(*this);
            leaf = h;
            return StepTask(h);
        }

        template <class U>
        void return_value(U&& v) {
            value.emplace(std::forward<U>(v));
        }
    };

    using handle_type = std::coroutine_handle<promise_type>;

    StepTask() = default;
    StepTask(StepTask&& o) noexcept : h_(std::exchange(o.h_, {})) {}
    StepTask& operator=(StepTask&& o) noexcept {
        if (this != &o) {
            destroy();
            h_ = std::exchange(o.h_, {});
        }
        return *this;
    }
    StepTask(const StepTask&) = delete;
    StepTask& operator=(const StepTask&) = delete;
    ~StepTask() { destroy(); }

    bool valid() const noexcept { return static_cast<bool>(h_); }
    bool finished() const noexcept { return h_ && h_.done(); }
    std::uint64_t steps_done() const noexcept { return h_ ? h_.promise().steps : 0; }

    /// Runs until `budget` more steps have been consumed or the task is done.
    /// Returns the steps consumed; zero once finished.
    std::uint64_t process_steps(std::uint64_t budget) {
        if (!h_ || h_.done()) return 0;
        auto& p = h_.promise();
        const std::uint64_t start = p.steps;
        while (!h_.done() && p.steps - start < budget) {
            p.leaf.resume();
        }
        if (h_.done() && p.error) std::rethrow_exception(p.error);
        return p.steps - start;
    }

    std::uint64_t run_to_completion() { return process_steps(kUnboundedSteps); }

    const T& result() const& { return *h_.promise().value; }
    T take_result() { return std::move(*h_.promise().value); }

    /// Runs the task to completion and returns its result.
    T get() && {
        run_to_completion();
        return take_result();
    }

    struct Awaiter {
        handle_type child;

        bool await_ready() noexcept { return false; }

        template <class P>
        std::coroutine_handle<> await_suspend(std::coroutine_handle<P> parent) noexcept {
            auto& cp = child.promise();
            cp.root = parent.promise().root;
            cp.continuation = parent;
            cp.root->leaf = child;
            return child;
        }

        T await_resume() {
            auto& cp = child.promise();
            if (cp.error) std::rethrow_exception(cp.error);
            return std::move(*cp.value);
        }
    };

    Awaiter operator co_await() && noexcept { return Awaiter{h_}; }

private:
    explicit StepTask(handle_type h) noexcept : h_(h) {}

    void destroy() noexcept {
        if (h_) h_.destroy();
        h_ = {};
    }

    handle_type h_;
};

}  // namespace dynmatch

#endif  // DYNMATCH_STEP_TASK_HPP_
