/* Calendar arithmetic on the proleptic Gregorian calendar. */

struct Date {
    int year;
    int month;
    int day;
};

int is_leap(int year) {
    if (year % 400 == 0) {
        return 1;
    }
    if (year % 100 == 0) {
        return 0;
    }
    return year % 4 == 0;
}

int days_in_month(int year, int month) {
    if (month == 2) {
        return is_leap(year) ? 29 : 28;
    }
    if (month == 4 || month == 6 || month == 9 || month == 11) {
        return 30;
    }
    return 31;
}

int date_valid(struct Date *d) {
    if (d->month < 1 || d->month > 12) {
        return 0;
    }
    return d->day >= 1 && d->day <= days_in_month(d->year, d->month);
}

int day_of_year(struct Date *d) {
    int total = d->day;
    int m;
    for (m = 1; m < d->month; m = m + 1) {
        total = total + days_in_month(d->year, m);
    }
    return total;
}

void date_next(struct Date *d) {
    d->day = d->day + 1;
    if (d->day > days_in_month(d->year, d->month)) {
        d->day = 1;
        d->month = d->month + 1;
        if (d->month > 12) {
            d->month = 1;
            d->year = d->year + 1;
        }
    }
}

void date_add_days(struct Date *d, int n) {
    while (n > 0) {
        date_next(d);
        n = n - 1;
    }
}

int date_compare(struct Date *a, struct Date *b) {
    if (a->year != b->year) {
        return a->year - b->year;
    }
    if (a->month != b->month) {
        return a->month - b->month;
    }
    return a->day - b->day;
}

int days_between(struct Date *a, struct Date *b) {
    struct Date cur;
    int n = 0;
    cur.year = a->year;
    cur.month = a->month;
    cur.day = a->day;
    while (date_compare(&cur, b) < 0) {
        date_next(&cur);
        n = n + 1;
    }
    return n;
}

int weekday(struct Date *d) {
    int y = d->year;
    int m = d->month;
    int k;
    int j;
    if (m < 3) {
        m = m + 12;
        y = y - 1;
    }
    k = y % 100;
    j = y / 100;
    return (d->day + 13 * (m + 1) / 5 + k + k / 4 + j / 4 + 5 * j) % 7;
}

int count_fridays_13(int year) {
    struct Date d;
    int count = 0;
    d.year = year;
    d.day = 13;
    for (d.month = 1; d.month <= 12; d.month = d.month + 1) {
        if (weekday(&d) == 6) {
            count = count + 1;
        }
    }
    return count;
}
