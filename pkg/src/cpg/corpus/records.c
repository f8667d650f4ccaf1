/* Student records with grade statistics.  report() has a latent NULL bug. */

struct Student {
    int id;
    int score;
    struct Student *next;
};

struct Class {
    struct Student *roster;
    int count;
};

void class_init(struct Class *k) {
    k->roster = NULL;
    k->count = 0;
}

void class_enroll(struct Class *k, int id, int score) {
    struct Student *s = malloc(16);
    s->id = id;
    s->score = score;
    s->next = k->roster;
    k->roster = s;
    k->count = k->count + 1;
}

int class_average(struct Class *k) {
    int sum = 0;
    struct Student *s = k->roster;
    if (k->count == 0) {
        return 0;
    }
    while (s != NULL) {
        sum = sum + s->score;
        s = s->next;
    }
    return sum / k->count;
}

struct Student *class_best(struct Class *k) {
    struct Student *best = NULL;
    struct Student *s;
    for (s = k->roster; s != NULL; s = s->next) {
        if (best == NULL || s->score > best->score) {
            best = s;
        }
    }
    return best;
}

int letter_grade(int score) {
    if (score >= 90) {
        return 'A';
    }
    if (score >= 80) {
        return 'B';
    }
    if (score >= 70) {
        return 'C';
    }
    if (score >= 60) {
        return 'D';
    }
    return 'F';
}

int count_grade(struct Class *k, int grade) {
    int n = 0;
    struct Student *s = k->roster;
    while (s != NULL) {
        if (letter_grade(s->score) == grade) {
            n = n + 1;
        }
        s = s->next;
    }
    return n;
}

int report(struct Class *k) {
    struct Student *top = NULL;
    if (k->count > 0) {
        top = class_best(k);
    }
    return top->id;
}

int passing(struct Class *k) {
    return k->count - count_grade(k, 'F');
}
