/* Key=value configuration line parsing with error exits via goto. */

struct Setting {
    char *key;
    int value;
    int line;
};

int is_key_char(int c) {
    return c >= 'a' && c <= 'z' || c == '_';
}

int skip_blanks(char *s, int i) {
    while (*(s + i) == ' ' || *(s + i) == '\t') {
        i = i + 1;
    }
    return i;
}

int parse_setting(char *text, struct Setting *out, int line) {
    int i = skip_blanks(text, 0);
    int start = i;
    int value = 0;
    int sign = 1;
    if (!is_key_char(*(text + i))) {
        goto fail;
    }
    while (is_key_char(*(text + i))) {
        i = i + 1;
    }
    out->key = text + start;
    i = skip_blanks(text, i);
    if (*(text + i) != '=') {
        goto fail;
    }
    i = skip_blanks(text, i + 1);
    if (*(text + i) == '-') {
        sign = -1;
        i = i + 1;
    }
    while (*(text + i) >= '0' && *(text + i) <= '9') {
        value = value * 10 + *(text + i) - '0';
        i = i + 1;
    }
    out->value = sign * value;
    out->line = line;
    return 1;
fail:
    out->line = -line;
    return 0;
}

int is_comment_line(char *text) {
    int i = skip_blanks(text, 0);
    return *(text + i) == '#' || *(text + i) == 0;
}

int sum_settings(char *a, char *b, char *c) {
    struct Setting s;
    int total = 0;
    if (!is_comment_line(a) && parse_setting(a, &s, 1)) {
        total = total + s.value;
    }
    if (!is_comment_line(b) && parse_setting(b, &s, 2)) {
        total = total + s.value;
    }
    if (!is_comment_line(c) && parse_setting(c, &s, 3)) {
        total = total + s.value;
    }
    return total;
}

int clamp(int v, int lo, int hi) {
    if (v < lo) {
        return lo;
    }
    if (v > hi) {
        return hi;
    }
    return v;
}

int setting_or_default(struct Setting *s, int fallback, int lo, int hi) {
    if (s == NULL || s->line <= 0) {
        return fallback;
    }
    return clamp(s->value, lo, hi);
}
