/* Small number-theory helpers. */

int gcd(int a, int b) {
    int t;
    while (b != 0) {
        t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int lcm(int a, int b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return a / gcd(a, b) * b;
}

int is_prime(int n) {
    int d;
    if (n < 2) {
        return 0;
    }
    for (d = 2; d * d <= n; d = d + 1) {
        if (n % d == 0) {
            return 0;
        }
    }
    return 1;
}

int count_primes(int limit) {
    int count = 0;
    int i;
    for (i = 2; i <= limit; i = i + 1) {
        if (is_prime(i)) {
            count = count + 1;
        }
    }
    return count;
}

int power(int base, int exp) {
    int result = 1;
    while (exp > 0) {
        if (exp % 2 == 1) {
            result = result * base;
        }
        base = base * base;
        exp = exp / 2;
    }
    return result;
}

int power_mod(int base, int exp, int mod) {
    int result = 1;
    base = base % mod;
    while (exp > 0) {
        if (exp % 2 == 1) {
            result = result * base % mod;
        }
        base = base * base % mod;
        exp = exp / 2;
    }
    return result;
}

int fib(int n) {
    int a = 0;
    int b = 1;
    int i = 0;
    int t;
    while (i < n) {
        t = a + b;
        a = b;
        b = t;
        i = i + 1;
    }
    return a;
}

int digit_sum(int n) {
    int sum = 0;
    if (n < 0) {
        n = -n;
    }
    do {
        sum = sum + n % 10;
        n = n / 10;
    } while (n > 0);
    return sum;
}

int reverse_digits(int n) {
    int r = 0;
    while (n > 0) {
        r = r * 10 + n % 10;
        n = n / 10;
    }
    return r;
}

int is_palindrome_number(int n) {
    return n >= 0 && n == reverse_digits(n);
}

int collatz_steps(int n) {
    int steps = 0;
    while (n != 1 && n > 0) {
        n = n % 2 == 0 ? n / 2 : 3 * n + 1;
        steps = steps + 1;
    }
    return steps;
}

int isqrt(int n) {
    int lo = 0;
    int hi = n;
    int mid;
    int best = 0;
    while (lo <= hi) {
        mid = lo + (hi - lo) / 2;
        if (mid != 0 && mid > n / mid) {
            hi = mid - 1;
        } else {
            best = mid;
            lo = mid + 1;
        }
    }
    return best;
}
