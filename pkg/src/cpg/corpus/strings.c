/* String routines over NUL-terminated char pointers. */

int str_len(char *s) {
    int n = 0;
    while (*(s + n) != 0) {
        n = n + 1;
    }
    return n;
}

int str_eq(char *a, char *b) {
    while (*a != 0 && *a == *b) {
        a = a + 1;
        b = b + 1;
    }
    return *a == *b;
}

int str_cmp(char *a, char *b) {
    while (*a != 0 && *a == *b) {
        a = a + 1;
        b = b + 1;
    }
    return *a - *b;
}

void str_copy(char *dst, char *src) {
    while (*src != 0) {
        *dst = *src;
        dst = dst + 1;
        src = src + 1;
    }
    *dst = 0;
}

char *str_chr(char *s, int c) {
    while (*s != 0) {
        if (*s == c) {
            return s;
        }
        s = s + 1;
    }
    return NULL;
}

int count_char(char *s, int c) {
    int n = 0;
    char *hit = str_chr(s, c);
    while (hit != NULL) {
        n = n + 1;
        hit = str_chr(hit + 1, c);
    }
    return n;
}

int is_space(int c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

int is_digit(int c) {
    return c >= '0' && c <= '9';
}

int is_alpha(int c) {
    return c >= 'a' && c <= 'z' || c >= 'A' && c <= 'Z';
}

int to_upper(int c) {
    if (c >= 'a' && c <= 'z') {
        return c - 'a' + 'A';
    }
    return c;
}

void upcase(char *s) {
    for (; *s != 0; s = s + 1) {
        *s = to_upper(*s);
    }
}

int parse_int(char *s) {
    int sign = 1;
    int value = 0;
    while (is_space(*s)) {
        s = s + 1;
    }
    if (*s == '-') {
        sign = -1;
        s = s + 1;
    }
    while (is_digit(*s)) {
        value = value * 10 + (*s - '0');
        s = s + 1;
    }
    return sign * value;
}

int word_count(char *s) {
    int words = 0;
    int inside = 0;
    while (*s != 0) {
        if (is_space(*s)) {
            inside = 0;
        } else if (!inside) {
            inside = 1;
            words = words + 1;
        }
        s = s + 1;
    }
    return words;
}

int starts_with(char *s, char *prefix) {
    while (*prefix != 0) {
        if (*s != *prefix) {
            return 0;
        }
        s = s + 1;
        prefix = prefix + 1;
    }
    return 1;
}

void reverse_in_place(char *s) {
    char *end = s + str_len(s) - 1;
    char tmp;
    while (s < end) {
        tmp = *s;
        *s = *end;
        *end = tmp;
        s = s + 1;
        end = end - 1;
    }
}
