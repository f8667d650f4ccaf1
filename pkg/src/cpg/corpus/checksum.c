/* Checksums over byte strings. */

int adler32(char *data, int length) {
    int a = 1;
    int b = 0;
    int i;
    for (i = 0; i < length; i = i + 1) {
        a = (a + *(data + i)) % 65521;
        b = (b + a) % 65521;
    }
    return b * 65536 + a;
}

int fletcher16(char *data, int length) {
    int sum1 = 0;
    int sum2 = 0;
    int i = 0;
    while (i < length) {
        sum1 = (sum1 + *(data + i)) % 255;
        sum2 = (sum2 + sum1) % 255;
        i = i + 1;
    }
    return sum2 * 256 + sum1;
}

int djb2(char *s) {
    int hash = 5381;
    while (*s != 0) {
        hash = (hash * 33 + *s) % 1000000007;
        s = s + 1;
    }
    return hash;
}

int luhn_valid(char *digits) {
    int sum = 0;
    int n = 0;
    int d;
    int double_it = 0;
    char *p = digits;
    while (*p != 0) {
        n = n + 1;
        p = p + 1;
    }
    while (n > 0) {
        n = n - 1;
        d = *(digits + n) - '0';
        if (double_it) {
            d = d * 2;
            if (d > 9) {
                d = d - 9;
            }
        }
        sum = sum + d;
        double_it = !double_it;
    }
    return sum % 10 == 0;
}

int parity(int x) {
    int p = 0;
    while (x > 0) {
        p = p + x % 2;
        x = x / 2;
    }
    return p % 2;
}

int isbn10_valid(char *s) {
    int sum = 0;
    int i = 0;
    int c;
    while (i < 10) {
        c = *(s + i);
        if (c == 0) {
            return 0;
        }
        if (i == 9 && c == 'X') {
            sum = sum + 10;
        } else if (c >= '0' && c <= '9') {
            sum = sum + (c - '0') * (10 - i);
        } else {
            return 0;
        }
        i = i + 1;
    }
    return sum % 11 == 0;
}
